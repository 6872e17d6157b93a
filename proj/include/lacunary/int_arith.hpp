#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace lacunary {

using Integer = mpz_class;
using Exponent = std::uint64_t;

/// |a0| = p^u with p prime and u >= 1.
struct PrimePower {
  Integer p;
  unsigned u = 0;

  Integer value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic primality.
///
/// Exact for every n below 3.3e24 (Miller-Rabin with the prime bases up to 41,
/// which is proven deterministic in that range). Larger inputs throw
/// std::domain_error: no verdict is ever produced from a probabilistic test.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Returns (p, u) with n = p^u, p prime, or nullopt. Requires n >= 2.
std::optional<PrimePower> prime_power_decompose(const Integer& n);

/// e(n): the exact power of two dividing n. Requires n >= 1.
std::uint64_t largest_even_part(std::uint64_t n);
Integer largest_even_part(const Integer& n);

/// Sign of a nonzero integer; throws std::invalid_argument on zero.
int sgn(const Integer& z);
int sgn(long z);

std::uint64_t gcd_int(std::uint64_t a, std::uint64_t b);
Integer gcd_int(const Integer& a, const Integer& b);

/// Euler's totient, by trial division.
std::uint64_t euler_phi(std::uint64_t n);

Integer ipow(const Integer& base, std::uint64_t exp);

}  // namespace lacunary
