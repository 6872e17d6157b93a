#include "lacunary/binomial_gcd.hpp"

#include <stdexcept>

namespace lacunary {

SignedBinomial::SignedBinomial(Exponent n_, int s_) : n(n_), s(s_) {
  if (n == 0) throw std::invalid_argument("SignedBinomial: exponent must be >= 1");
  if (s != 1 && s != -1) throw std::invalid_argument("SignedBinomial: sign must be +1 or -1");
}

namespace {

// gcd(x^n + 1, x^m - 1)
std::optional<SignedBinomial> plus_minus(Exponent n, Exponent m) {
  if (largest_even_part(m) >= 2 * largest_even_part(n)) return SignedBinomial(gcd_int(n, m / 2), 1);
  return std::nullopt;
}

}  // namespace

std::optional<SignedBinomial> gcd_binomial_shape(const SignedBinomial& a, const SignedBinomial& b) {
  if (a.s < 0 && b.s < 0) return SignedBinomial(gcd_int(a.n, b.n), -1);
  if (a.s > 0 && b.s > 0) {
    if (largest_even_part(a.n) == largest_even_part(b.n)) return SignedBinomial(gcd_int(a.n, b.n), 1);
    return std::nullopt;
  }
  return a.s > 0 ? plus_minus(a.n, b.n) : plus_minus(b.n, a.n);
}

SparsePoly gcd_binomial(const SignedBinomial& a, const SignedBinomial& b) {
  const auto g = gcd_binomial_shape(a, b);
  return g ? g->to_poly() : SparsePoly::constant(1);
}

std::optional<SignedBinomial> compute_fc_shape(const SparsePoly& f) {
  const Integer a0 = f.constant_term();
  if (a0 == 0) throw std::invalid_argument("compute_fc: constant term must be nonzero");
  if (f.is_constant()) throw std::invalid_argument("compute_fc: polynomial must be nonconstant");
  const int s0 = sgn(a0);
  std::optional<SignedBinomial> acc;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (t.exp == 0) continue;
    const SignedBinomial next(t.exp, s0 * sgn(t.coeff));
    if (first) {
      acc = next;
      first = false;
    } else {
      acc = gcd_binomial_shape(*acc, next);
      if (!acc) break;
    }
  }
  return acc;
}

SparsePoly compute_fc(const SparsePoly& f) {
  const auto g = compute_fc_shape(f);
  return g ? g->to_poly() : SparsePoly::constant(1);
}

}  // namespace lacunary
