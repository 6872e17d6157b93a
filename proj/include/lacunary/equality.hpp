#pragma once

#include "lacunary/criteria.hpp"

namespace lacunary {

/// f = f_c * f_n with f_c the cyclotomic part.
struct Decomposition {
  SparsePoly f_c;
  SparsePoly f_n;
  bool f_n_certified_irreducible = false;
  bool f_n_nonreciprocal = false;
  /// Which result certifies f_n, when certified.
  std::optional<Criterion> certified_by;
};

/// |a0| = sum of the other |coefficients|.
bool is_equality_case(const SparsePoly& f);

/// Requires f(0) != 0 and the equality |a0| = tail sum (std::invalid_argument otherwise).
Decomposition decompose_equality(const SparsePoly& f, const FamilyMembership& membership);

/// All coefficients positive: irreducible iff two positive exponents have
/// different largest even parts.
Certificate check_positive_case(const SparsePoly& f, const FamilyMembership& membership);

/// Two adjacent positive exponents n and n-1: reducible iff f(1) = 0 or f(-1) = 0.
Certificate check_consecutive_exponents(const SparsePoly& f, const FamilyMembership& membership);

}  // namespace lacunary
