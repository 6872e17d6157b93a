#include "lacunary/int_arith.hpp"

#include <array>
#include <stdexcept>

namespace lacunary {

namespace {

constexpr std::array<std::uint64_t, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 primes as bases is deterministic below this bound.
const Integer& deterministic_bound() {
  static const Integer bound("3317044064679887385961981");
  return bound;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Integer& n, unsigned long a) {
  Integer d = n - 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  const Integer base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == minus_one) return true;
  }
  return false;
}

}  // namespace

Integer PrimePower::value() const { return ipow(p, u); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : kWitnesses) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  if (n < 43 * 43) return true;
  for (std::uint64_t a : kWitnesses)
    if (!strong_probable_prime(n, a)) return false;
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  if (n >= deterministic_bound())
    throw std::domain_error("primality of integers above 3.3e24 is not decided deterministically");
  for (std::uint64_t q : kWitnesses)
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
  for (std::uint64_t a : kWitnesses)
    if (!strong_probable_prime(n, a)) return false;
  return true;
}

std::optional<PrimePower> prime_power_decompose(const Integer& n) {
  if (n < 2) throw std::invalid_argument("prime_power_decompose: n must be >= 2");
  const std::size_t top = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;  // floor(log2 n)
  Integer root;
  for (std::size_t u = top; u >= 1; --u) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), u) != 0 && is_prime(root))
      return PrimePower{root, static_cast<unsigned>(u)};
  }
  return std::nullopt;
}

std::uint64_t largest_even_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("largest_even_part: n must be >= 1");
  return n & (~n + 1);
}

Integer largest_even_part(const Integer& n) {
  if (n < 1) throw std::invalid_argument("largest_even_part: n must be >= 1");
  Integer r;
  mpz_setbit(r.get_mpz_t(), mpz_scan1(n.get_mpz_t(), 0));
  return r;
}

int sgn(const Integer& z) {
  const int s = ::sgn(z);
  if (s == 0) throw std::invalid_argument("sgn: zero has no sign");
  return s;
}

int sgn(long z) {
  if (z == 0) throw std::invalid_argument("sgn: zero has no sign");
  return z > 0 ? 1 : -1;
}

std::uint64_t gcd_int(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace lacunary
