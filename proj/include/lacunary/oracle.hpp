#pragma once

#include <cstdint>
#include <vector>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

inline constexpr Exponent kDefaultDegreeCap = 14;
/// Hard ceiling on any degree cap.
inline constexpr Exponent kMaxDegreeCap = 64;

struct FactorPower {
  SparsePoly factor;
  unsigned multiplicity = 1;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// content * prod factor^multiplicity; factors primitive with positive leading
/// coefficient, sorted by degree and then by coefficients from the top down.
struct Factorization {
  Integer content;
  std::vector<FactorPower> factors;

  SparsePoly expand() const;
  /// Number of irreducible factors counted with multiplicity.
  unsigned factor_count() const;
};

/// Complete factorization over Z by Kronecker's interpolation method.
/// Throws std::invalid_argument on f = 0 or deg f > degree_cap.
Factorization factorize(const SparsePoly& f, Exponent degree_cap);

/// Irreducible over Z: one factor of multiplicity one and content +-1.
bool is_irreducible(const SparsePoly& f, Exponent degree_cap = kDefaultDegreeCap);

struct CyclotomicFactor {
  Exponent d = 1;
  unsigned multiplicity = 1;

  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

/// Every Phi_d dividing f, by trial division over all d with phi(d) <= deg f.
/// Requires f(0) != 0.
std::vector<CyclotomicFactor> cyclotomic_factor_list(const SparsePoly& f);

/// Determinant of the Sylvester matrix. Throws on a zero argument.
Integer resultant(const SparsePoly& f, const SparsePoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires deg f >= 1.
Integer discriminant(const SparsePoly& f);

namespace detail {

/// Degrees of the irreducible factors of f mod q, or empty when q divides the
/// leading coefficient or f mod q is not squarefree.
std::vector<unsigned> degree_pattern(const std::vector<Integer>& dense, std::uint32_t q);

/// Degrees k in [0, deg f] that a factor of f over Z could have, intersected
/// over several small primes. Bit k set means degree k is still possible.
std::vector<bool> admissible_factor_degrees(const std::vector<Integer>& dense);

}  // namespace detail

}  // namespace lacunary
