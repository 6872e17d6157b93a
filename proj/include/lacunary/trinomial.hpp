#pragma once

#include <optional>
#include <string>

#include "lacunary/criteria.hpp"

namespace lacunary {

/// a x^n + eps1 b x^m + eps2 p^u, with a, b > 0, n > m > 0, p prime, u >= 1.
struct TrinomialSpec {
  Integer a;
  Exponent n = 0;
  int eps1 = 1;
  Integer b;
  Exponent m = 0;
  Integer p;
  unsigned u = 1;
  int eps2 = 1;

  /// Throws std::invalid_argument when the field invariants fail.
  void validate() const;
  SparsePoly to_poly() const;
  Integer prime_power() const { return ipow(p, u); }
};

/// Reads a x^n + c x^m + d back into a spec: three terms, positive leading
/// coefficient, constant term +-p^u.
std::optional<TrinomialSpec> trinomial_from_poly(const SparsePoly& f);

/// Discriminant of lead x^n + mid x^m + constant in closed form.
/// Requires n > m >= 1 and all three coefficients nonzero.
Integer trinomial_discriminant(const Integer& lead, Exponent n, const Integer& mid, Exponent m,
                               const Integer& constant);

/// Discriminant of x^n + a x^m + b.
Integer discriminant_monic_trinomial(Exponent n, Exponent m, const Integer& a, const Integer& b);

Integer discriminant_general_trinomial(const TrinomialSpec& t);

struct Separability {
  /// false when the hypotheses (gcd(a,b) = gcd(n,m) = 1, p not dividing ab,
  /// b < p^u, u >= 2) fail; the fields below are then meaningless.
  bool applicable = false;
  bool separable = true;
  /// Repeated integer root, when the trinomial is not separable.
  std::optional<Integer> witness;
  std::string note;
};

Separability is_separable(const TrinomialSpec& t);

enum class SeparabilityClass { Separable, ExceptionCubic, ExceptionQuartic, NotApplicable };

std::string_view to_string(SeparabilityClass c);

/// On (S_2 \ S'_2) u (S_3 \ S'_3) with gcd(a,b) = gcd(m,n) = 1 and b < p^u.
SeparabilityClass classify_exception_corollary(const TrinomialSpec& t);

/// The equality case p^u = a + b on S_1, S'_2, S'_3.
Certificate classify_equality_trinomial(const TrinomialSpec& t);

}  // namespace lacunary
