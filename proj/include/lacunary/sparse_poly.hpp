#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "lacunary/int_arith.hpp"

namespace lacunary {

struct Term {
  Exponent exp = 0;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in Z[x].
///
/// Terms are kept strictly increasing by exponent with no zero coefficients,
/// so the zero polynomial is the empty term list and equality is structural.
class SparsePoly {
 public:
  SparsePoly() = default;
  /// Terms in any order; duplicate exponents are summed and zeros dropped.
  SparsePoly(std::initializer_list<std::pair<Exponent, long>> terms);
  explicit SparsePoly(std::vector<Term> terms);

  static SparsePoly constant(const Integer& c);
  static SparsePoly monomial(const Integer& c, Exponent e);
  /// x^n + s.
  static SparsePoly binomial(Exponent n, long s);
  /// Dense coefficients, index = exponent.
  static SparsePoly from_dense(const std::vector<Integer>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1; }

  /// Largest exponent; throws on the zero polynomial.
  Exponent degree() const;
  /// Smallest exponent carrying a nonzero coefficient; throws on zero.
  Exponent lowest_exponent() const;
  const Integer& leading_coeff() const;
  Integer constant_term() const;
  Integer coeff(Exponent e) const;

  /// Dense coefficients, index = exponent. Only for small degrees.
  std::vector<Integer> dense() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& g);
  SparsePoly& operator-=(const SparsePoly& g);
  SparsePoly& operator*=(const SparsePoly& g);
  SparsePoly& operator*=(const Integer& c);

  friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
  friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
  friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
  friend SparsePoly operator*(SparsePoly f, const Integer& c) { return f *= c; }
  friend SparsePoly operator*(const Integer& c, SparsePoly f) { return f *= c; }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
Integer evaluate(const SparsePoly& f, const Integer& t);
SparsePoly derivative(const SparsePoly& f);

/// x^deg(f) f(1/x). Throws on the zero polynomial.
SparsePoly reciprocal(const SparsePoly& f);
/// f = +reciprocal(f) or f = -reciprocal(f). Throws on zero.
bool is_reciprocal(const SparsePoly& f);

/// q with f = q g over Z, if it exists. Throws std::domain_error when g = 0.
std::optional<SparsePoly> exact_divide(const SparsePoly& f, const SparsePoly& g);

struct ContentPrimitive {
  Integer content;
  SparsePoly primitive;
};

/// content carries the sign of the leading coefficient, so primitive has a
/// positive leading coefficient.
ContentPrimitive content_primitive(const SparsePoly& f);

/// Primitive gcd over Q with a positive leading coefficient.
SparsePoly gcd_poly(const SparsePoly& f, const SparsePoly& g);

/// Phi_d, as (x^d - 1) divided by Phi_e for every proper divisor e of d.
/// Memoized; the reference stays valid for the life of the program.
const SparsePoly& cyclotomic(Exponent d);

SparsePoly inflate(const SparsePoly& f, Exponent d);

struct Deflation {
  SparsePoly base;
  Exponent factor = 1;
};

/// Largest d with f(x) = g(x^d); d = 1 when f has no positive exponent.
Deflation deflate(const SparsePoly& f);

/// x^k with k = lowest exponent of f, and f / x^k.
std::pair<Exponent, SparsePoly> strip_x_power(const SparsePoly& f);

/// Sum of |a_i| over the positive-exponent terms.
Integer tail_abs_sum(const SparsePoly& f);

}  // namespace lacunary
