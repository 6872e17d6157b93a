#pragma once

#include <optional>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

/// x^n + s with n >= 1 and s in {-1, +1}.
struct SignedBinomial {
  Exponent n = 1;
  int s = 1;

  SignedBinomial(Exponent n, int s);
  SparsePoly to_poly() const { return SparsePoly::binomial(n, s); }
  friend bool operator==(const SignedBinomial&, const SignedBinomial&) = default;
};

/// gcd(x^n + s_a, x^m + s_b) in closed form: a binomial, or nullopt for the unit 1.
std::optional<SignedBinomial> gcd_binomial_shape(const SignedBinomial& a, const SignedBinomial& b);

SparsePoly gcd_binomial(const SignedBinomial& a, const SignedBinomial& b);

/// gcd over i of x^{n_i} + sgn(a0 a_{n_i}), folded in binomial form.
/// Requires a nonzero constant term and at least one positive exponent.
std::optional<SignedBinomial> compute_fc_shape(const SparsePoly& f);
SparsePoly compute_fc(const SparsePoly& f);

}  // namespace lacunary
