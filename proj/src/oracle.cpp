#include "lacunary/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lacunary {

// ---------------------------------------------------------------------------
// Arithmetic in (Z/q)[x] for primes q < 2^11, on fixed-size arrays. Every
// intermediate sum stays below 2^32, so values are reduced lazily.

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr std::size_t kSlots = kMaxDegreeCap + 1;

constexpr u32 kSmallPrimes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061,
                                1063, 1069, 1087, 1091, 1093, 1097, 1103, 1109, 1117, 1123,
                                1129, 1151, 1153, 1163, 1171, 1181, 1187, 1193};
constexpr std::size_t kPrimeCount = std::size(kSmallPrimes);
constexpr int kGoodPrimeTarget = 20;

struct Field {
  u32 q;
  u64 magic;  // Lemire: a mod q = ((magic * a) * q) >> 64 for a < 2^32
  const std::vector<u32>* inverses;

  u32 red(u32 a) const {
    return static_cast<u32>((static_cast<unsigned __int128>(magic * a) * q) >> 64);
  }
  u32 inv(u32 a) const { return (*inverses)[a]; }
};

const Field& field(std::size_t index) {
  static const auto fields = [] {
    static std::array<std::vector<u32>, kPrimeCount> inverses;
    std::array<Field, kPrimeCount> out{};
    for (std::size_t k = 0; k < kPrimeCount; ++k) {
      const u32 q = kSmallPrimes[k];
      auto& inv = inverses[k];
      inv.assign(q, 0);
      inv[1] = 1;
      // inv[i] = -(q / i) * inv[q mod i]
      for (u32 i = 2; i < q; ++i) inv[i] = (q - (q / i) * inv[q % i] % q) % q;
      out[k] = {q, ~u64{0} / q + 1, &inv};
    }
    return out;
  }();
  return fields[index];
}

struct ModPoly {
  int deg = -1;  // -1 for zero
  std::array<u32, kSlots> c;  // entries above deg are unspecified

  void trim() {
    while (deg >= 0 && c[deg] == 0) --deg;
  }
};

void make_monic(ModPoly& a, const Field& F) {
  if (a.deg < 0 || a.c[a.deg] == 1) return;
  const u32 inv = F.inv(a.c[a.deg]);
  for (int i = 0; i <= a.deg; ++i) a.c[i] = F.red(a.c[i] * inv);
}

// a mod b, b monic.
void reduce(ModPoly& a, const ModPoly& b, const Field& F) {
  const int n = b.deg;
  const u32 q = F.q;
  for (int k = a.deg; k >= n; --k) {
    const u32 c = a.c[k];
    if (c == 0) continue;
    const u32 neg = q - c;
    for (int i = 0; i < n; ++i) a.c[k - n + i] = F.red(a.c[k - n + i] + neg * b.c[i]);
  }
  if (a.deg >= n) a.deg = n - 1;
  a.trim();
}

// a * b mod f, f monic of degree n, a and b reduced.
void mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, const Field& F, ModPoly& out) {
  if (a.deg < 0 || b.deg < 0) {
    out.deg = -1;
    return;
  }
  std::array<u32, 2 * kSlots> t;
  const int top = a.deg + b.deg;
  std::fill_n(t.begin(), top + 1, 0u);
  for (int i = 0; i <= a.deg; ++i) {
    const u32 ai = a.c[i];
    if (ai == 0) continue;
    for (int j = 0; j <= b.deg; ++j) t[i + j] += ai * b.c[j];
  }
  const int n = f.deg;
  for (int k = top; k >= n; --k) {
    const u32 c = F.red(t[k]);
    if (c == 0) continue;
    const u32 neg = F.q - c;
    for (int i = 0; i < n; ++i) t[k - n + i] += neg * f.c[i];
  }
  out.deg = std::min(top, n - 1);
  for (int i = 0; i <= out.deg; ++i) out.c[i] = F.red(t[i]);
  out.trim();
}

// a * x mod f
void mul_x_mod(ModPoly& a, const ModPoly& f, const Field& F) {
  if (a.deg < 0) return;
  const int n = f.deg;
  if (a.deg + 1 < n) {
    for (int i = a.deg + 1; i > 0; --i) a.c[i] = a.c[i - 1];
    a.c[0] = 0;
    ++a.deg;
    return;
  }
  const u32 neg = F.q - a.c[n - 1];
  for (int i = n - 1; i > 0; --i) a.c[i] = F.red(a.c[i - 1] + neg * f.c[i]);
  a.c[0] = F.red(neg * f.c[0]);
  a.deg = n - 1;
  a.trim();
}

// Monic gcd; both arguments are clobbered.
const ModPoly& gcd_mod(ModPoly& a, ModPoly& b, const Field& F) {
  ModPoly* x = &a;
  ModPoly* y = &b;
  while (y->deg >= 0) {
    make_monic(*y, F);
    reduce(*x, *y, F);
    std::swap(x, y);
  }
  make_monic(*x, F);
  return *x;
}

// a / b for monic b dividing a.
void div_exact_mod(ModPoly& a, const ModPoly& b, const Field& F) {
  ModPoly quot;
  const int nb = b.deg;
  quot.deg = a.deg - nb;
  for (int k = a.deg; k >= nb; --k) {
    const u32 c = a.c[k];
    quot.c[k - nb] = c;
    if (c == 0) continue;
    const u32 neg = F.q - c;
    for (int i = 0; i <= nb; ++i) a.c[k - nb + i] = F.red(a.c[k - nb + i] + neg * b.c[i]);
  }
  quot.trim();
  a = quot;
}

template <class Residue>
std::vector<unsigned> degree_pattern_impl(std::size_t n, Residue residue, const Field& F) {
  const u32 q = F.q;
  if (n == 0 || n > kMaxDegreeCap || q <= n) return {};
  ModPoly f;
  f.deg = static_cast<int>(n);
  for (std::size_t i = 0; i <= n; ++i) f.c[i] = residue(i, q);
  if (f.c[n] == 0) return {};
  make_monic(f, F);
  if (n == 1) return {1};

  {
    ModPoly a = f;
    ModPoly df;
    df.deg = static_cast<int>(n) - 1;
    for (std::size_t i = 1; i <= n; ++i) df.c[i - 1] = F.red(f.c[i] * static_cast<u32>(i));
    df.trim();
    if (gcd_mod(a, df, F).deg > 0) return {};
  }

  // x^q mod f, left to right over the bits of q
  ModPoly xq;
  xq.deg = 1;
  xq.c[0] = 0;
  xq.c[1] = 1;
  {
    int bit = 31 - __builtin_clz(q);
    ModPoly tmp;
    while (bit-- > 0) {
      mul_mod(xq, xq, f, F, tmp);
      xq = tmp;
      if ((q >> bit) & 1u) mul_x_mod(xq, f, F);
    }
  }
  // Frobenius: row i = x^(i q) mod f
  std::array<ModPoly, kSlots> rows;
  rows[0].deg = 0;
  rows[0].c[0] = 1;
  for (std::size_t i = 1; i < n; ++i) mul_mod(rows[i - 1], xq, f, F, rows[i]);

  std::vector<unsigned> out;
  ModPoly rest = f;
  ModPoly h = xq;
  for (unsigned k = 1; 2 * static_cast<int>(k) <= rest.deg; ++k) {
    ModPoly diff = h;
    if (diff.deg < 1) {
      for (int i = diff.deg + 1; i <= 1; ++i) diff.c[i] = 0;
      diff.deg = 1;
    }
    diff.c[1] = F.red(diff.c[1] + q - 1);
    diff.trim();
    ModPoly r = rest;
    const ModPoly& g = gcd_mod(r, diff, F);
    if (g.deg > 0) {
      for (int c = 0; c < g.deg / static_cast<int>(k); ++c) out.push_back(k);
      div_exact_mod(rest, g, F);
    }
    // h <- h^q
    std::array<u32, kSlots> acc;
    std::fill_n(acc.begin(), n, 0u);
    for (int i = 0; i <= h.deg; ++i) {
      const u32 hi = h.c[i];
      if (hi == 0) continue;
      for (int j = 0; j <= rows[i].deg; ++j) acc[j] += hi * rows[i].c[j];
    }
    h.deg = static_cast<int>(n) - 1;
    for (std::size_t j = 0; j < n; ++j) h.c[j] = F.red(acc[j]);
    h.trim();
  }
  if (rest.deg > 0) out.push_back(static_cast<unsigned>(rest.deg));
  return out;
}

template <class Residue>
std::vector<bool> admissible_impl(std::size_t n, Residue residue) {
  std::vector<bool> allowed(n + 1, true);
  int good = 0;
  for (std::size_t k = 0; k < kPrimeCount; ++k) {
    const auto pattern = degree_pattern_impl(n, residue, field(k));
    if (pattern.empty()) continue;
    std::vector<bool> sums(n + 1, false);
    sums[0] = true;
    for (unsigned k : pattern)
      for (std::size_t s = n + 1; s-- > k;)
        if (sums[s - k]) sums[s] = true;
    bool proper = false;
    for (std::size_t s = 0; s <= n; ++s) {
      allowed[s] = allowed[s] && sums[s];
      if (s > 0 && s < n && allowed[s]) proper = true;
    }
    if (!proper || ++good >= kGoodPrimeTarget) break;
  }
  return allowed;
}

auto integer_residues(const std::vector<Integer>& dense) {
  return [&dense](std::size_t i, u32 q) -> u32 { return static_cast<u32>(mpz_fdiv_ui(dense[i].get_mpz_t(), q)); };
}

auto machine_residues(const std::vector<long>& dense) {
  return [&dense](std::size_t i, u32 q) -> u32 {
    const long r = dense[i] % static_cast<long>(q);
    return static_cast<u32>(r < 0 ? r + q : r);
  };
}

}  // namespace

namespace detail {

std::vector<unsigned> degree_pattern(const std::vector<Integer>& dense, std::uint32_t q) {
  if (dense.size() < 2) return {};
  for (std::size_t k = 0; k < kPrimeCount; ++k)
    if (kSmallPrimes[k] == q) return degree_pattern_impl(dense.size() - 1, integer_residues(dense), field(k));
  throw std::invalid_argument("degree_pattern: q is not one of the tabulated primes");
}

std::vector<bool> admissible_factor_degrees(const std::vector<Integer>& dense) {
  if (dense.empty()) throw std::invalid_argument("admissible_factor_degrees: zero polynomial");
  return admissible_impl(dense.size() - 1, integer_residues(dense));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Divisors of machine-size integers.

namespace {

u64 mul_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto step = [&](u64 v) { return (mul_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void prime_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  prime_factors(d, out);
  prime_factors(n / d, out);
}

std::vector<u64> positive_divisors(u64 n) {
  std::vector<u64> primes;
  prime_factors(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<u64> divs{1};
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= primes[i];
      for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pk);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// ---------------------------------------------------------------------------
// Kronecker search for a factor of exact degree d.

using i128 = __int128;

struct Node {
  long t = 0;
  Integer value;
  std::vector<long long> candidates;  // admissible values of g(t)
};

SparsePoly newton_to_poly(const std::vector<long>& nodes, const std::vector<i128>& newton) {
  // g = c0 + c1 (x - t0) + c2 (x - t0)(x - t1) + ...
  std::vector<Integer> acc{Integer(0)};
  auto to_integer = [](i128 v) {
    const bool neg = v < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(static_cast<u64>(m >> 64));
    Integer lo = static_cast<unsigned long>(static_cast<u64>(m));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
  };
  for (std::size_t k = newton.size(); k-- > 0;) {
    // acc = acc * (x - t_k) + c_k
    std::vector<Integer> next(acc.size() + 1, Integer(0));
    const Integer t = nodes[k];
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * t;
    }
    next[0] += to_integer(newton[k]);
    acc = std::move(next);
  }
  return SparsePoly::from_dense(acc);
}

class KroneckerSearch {
 public:
  KroneckerSearch(const SparsePoly& s, unsigned d) : s_(s), d_(d) {}

  std::optional<SparsePoly> run() {
    if (!choose_nodes()) return std::nullopt;
    table_.assign((d_ + 1) * (d_ + 1), 0);
    return dfs(0);
  }

 private:
  bool choose_nodes() {
    const long radius = std::max<long>(8, static_cast<long>(d_) + 3);
    Integer norm2 = 0;
    for (const auto& t : s_.terms()) norm2 += t.coeff * t.coeff;
    const double norm = std::sqrt(norm2.get_d());
    const Integer limit = static_cast<long>(std::numeric_limits<long>::max() / 4);

    struct Scored {
      Node node;
      std::size_t weight;
    };
    std::vector<Scored> pool;
    for (long t = -radius; t <= radius; ++t) {
      Node node;
      node.t = t;
      node.value = evaluate(s_, Integer(t));
      if (node.value == 0) continue;  // a root of s; the degree-one search finds it
      const Integer mag = abs(node.value);
      if (mag > limit) {
        extra_.push_back(std::move(node));
        continue;
      }
      const auto divs = positive_divisors(mag.get_ui());
      const long double bound =
          static_cast<long double>(norm) * std::pow(1.0L + std::abs(t), static_cast<long double>(d_)) * 1.000001L +
          1.0L;
      for (u64 v : divs) {
        if (static_cast<long double>(v) > bound) break;
        node.candidates.push_back(static_cast<long long>(v));
        node.candidates.push_back(-static_cast<long long>(v));
      }
      const std::size_t w = node.candidates.size();
      pool.push_back({std::move(node), w});
    }
    if (pool.size() < d_ + 1) throw std::domain_error("kronecker: evaluation values exceed machine range");
    std::stable_sort(pool.begin(), pool.end(), [](const Scored& a, const Scored& b) {
      if (a.weight != b.weight) return a.weight < b.weight;
      return std::abs(a.node.t) < std::abs(b.node.t);
    });
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (i <= d_)
        nodes_.push_back(std::move(pool[i].node));
      else
        extra_.push_back(std::move(pool[i].node));
    }
    // g and -g are both factors: keep the one positive at the first node.
    std::erase_if(nodes_[0].candidates, [](long long v) { return v < 0; });
    return true;
  }

  i128& cell(std::size_t i, std::size_t j) { return table_[i * (d_ + 1) + j]; }

  std::optional<SparsePoly> dfs(std::size_t level) {
    if (level == d_ + 1) return accept();
    const Node& node = nodes_[level];
    for (long long v : node.candidates) {
      cell(level, 0) = v;
      bool ok = true;
      for (std::size_t j = 1; j <= level && ok; ++j) {
        const i128 num = cell(level, j - 1) - cell(level - 1, j - 1);
        const i128 den = static_cast<i128>(node.t) - nodes_[level - j].t;
        if (num % den != 0) {
          ok = false;
          break;
        }
        cell(level, j) = num / den;
      }
      if (!ok) continue;
      if (level == d_) {
        const i128 top = cell(level, level);
        if (top == 0 || top > std::numeric_limits<long>::max() || top < std::numeric_limits<long>::min()) continue;
        const Integer lead = static_cast<long>(top);
        if (!mpz_divisible_p(s_.leading_coeff().get_mpz_t(), lead.get_mpz_t())) continue;
      }
      if (auto r = dfs(level + 1)) return r;
    }
    return std::nullopt;
  }

  std::optional<SparsePoly> accept() {
    std::vector<long> ts;
    std::vector<i128> newton;
    for (std::size_t i = 0; i <= d_; ++i) {
      ts.push_back(nodes_[i].t);
      newton.push_back(cell(i, i));
    }
    SparsePoly g = newton_to_poly(ts, newton);
    if (g.is_zero() || g.degree() != d_) return std::nullopt;
    for (const Node& node : extra_) {
      const Integer gv = evaluate(g, Integer(node.t));
      if (gv == 0 || !mpz_divisible_p(node.value.get_mpz_t(), gv.get_mpz_t())) return std::nullopt;
    }
    if (!exact_divide(s_, g)) return std::nullopt;
    if (g.leading_coeff() < 0) g = -g;
    return g;
  }

  const SparsePoly& s_;
  unsigned d_;
  std::vector<Node> nodes_;
  std::vector<Node> extra_;
  std::vector<i128> table_;
};

// Irreducible factors of a squarefree primitive s with s(0) != 0 and lc > 0.
void split_squarefree(const SparsePoly& s, std::vector<SparsePoly>& out) {
  const Exponent n = s.degree();
  if (n <= 1) {
    out.push_back(s);
    return;
  }
  for (long t = -8; t <= 8; ++t) {
    if (evaluate(s, Integer(t)) != 0) continue;
    const SparsePoly root{{1, 1}, {0, -t}};
    out.push_back(root);
    split_squarefree(*exact_divide(s, root), out);
    return;
  }
  const auto allowed = detail::admissible_factor_degrees(s.dense());
  for (unsigned d = 1; 2 * d <= n; ++d) {
    if (!allowed[d] || !allowed[n - d]) continue;
    if (auto g = KroneckerSearch(s, d).run()) {
      out.push_back(*g);
      split_squarefree(*exact_divide(s, *g), out);
      return;
    }
  }
  out.push_back(s);
}

bool canonical_less(const SparsePoly& a, const SparsePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (Exponent e = a.degree() + 1; e-- > 0;) {
    const Integer ca = a.coeff(e);
    const Integer cb = b.coeff(e);
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

SparsePoly Factorization::expand() const {
  SparsePoly r = SparsePoly::constant(content);
  for (const auto& fp : factors)
    for (unsigned i = 0; i < fp.multiplicity; ++i) r *= fp.factor;
  return r;
}

unsigned Factorization::factor_count() const {
  unsigned c = 0;
  for (const auto& fp : factors) c += fp.multiplicity;
  return c;
}

Factorization factorize(const SparsePoly& f, Exponent degree_cap) {
  if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
  if (degree_cap > kMaxDegreeCap) throw std::invalid_argument("factorize: degree cap above the supported maximum");
  if (f.degree() > degree_cap) throw std::invalid_argument("factorize: degree exceeds the cap");

  auto [content, prim] = content_primitive(f);
  Factorization out;
  out.content = content;
  auto [k, rest] = strip_x_power(prim);
  if (k > 0) out.factors.push_back({SparsePoly{{1, 1}}, static_cast<unsigned>(k)});
  if (rest.is_constant()) return out;

  // squarefree parts: c = gcd(f, f'), w = f / c, then peel one multiplicity per round
  SparsePoly c = gcd_poly(rest, derivative(rest));
  SparsePoly w = *exact_divide(rest, c);
  for (unsigned mult = 1; !w.is_constant(); ++mult) {
    SparsePoly y = gcd_poly(w, c);
    SparsePoly z = *exact_divide(w, y);
    if (!z.is_constant()) {
      if (z.leading_coeff() < 0) z = -z;
      std::vector<SparsePoly> parts;
      split_squarefree(z, parts);
      for (auto& p : parts) out.factors.push_back({std::move(p), mult});
    }
    w = std::move(y);
    c = *exact_divide(c, w);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const SparsePoly& f, Exponent degree_cap) {
  if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("is_irreducible: requires deg f >= 1");
  if (f.degree() > degree_cap) throw std::invalid_argument("is_irreducible: degree exceeds the cap");
  const auto cp = content_primitive(f);
  if (abs(cp.content) != 1) return false;
  if (f.lowest_exponent() > 0) return f.degree() == 1;
  if (f.degree() == 1) return true;
  std::vector<bool> allowed;
  {
    std::vector<long> small(f.degree() + 1, 0);
    bool fits = true;
    for (const auto& t : f.terms()) {
      if (!t.coeff.fits_slong_p()) {
        fits = false;
        break;
      }
      small[t.exp] = t.coeff.get_si();
    }
    allowed = fits ? admissible_impl(small.size() - 1, machine_residues(small))
                   : detail::admissible_factor_degrees(f.dense());
  }
  bool proper = false;
  for (std::size_t s = 1; s < allowed.size() - 1; ++s) proper = proper || allowed[s];
  if (!proper) return true;
  const Factorization fac = factorize(f, degree_cap);
  return fac.factor_count() == 1;
}

std::vector<CyclotomicFactor> cyclotomic_factor_list(const SparsePoly& f) {
  if (f.is_zero() || f.constant_term() == 0)
    throw std::invalid_argument("cyclotomic_factor_list: requires f(0) != 0");
  std::vector<CyclotomicFactor> out;
  if (f.degree() == 0) return out;
  const Exponent n = f.degree();
  // Phi_d | f forces Phi_d(2) | f(2) and Phi_d(3) | f(3)
  const Integer f2 = evaluate(f, Integer(2));
  const Integer f3 = evaluate(f, Integer(3));
  // phi(d) >= sqrt(d / 2), so phi(d) <= n forces d <= 2 n^2
  for (Exponent d = 1; d <= 2 * n * n; ++d) {
    if (euler_phi(d) > n) continue;
    const SparsePoly& phi = cyclotomic(d);
    if (!mpz_divisible_p(f2.get_mpz_t(), evaluate(phi, Integer(2)).get_mpz_t())) continue;
    if (!mpz_divisible_p(f3.get_mpz_t(), evaluate(phi, Integer(3)).get_mpz_t())) continue;
    SparsePoly rest = f;
    unsigned mult = 0;
    while (auto q = exact_divide(rest, phi)) {
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.push_back({d, mult});
  }
  return out;
}

Integer resultant(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero argument");
  const Exponent n = f.degree();
  const Exponent m = g.degree();
  if (n == 0) return ipow(f.leading_coeff(), m);
  if (m == 0) return ipow(g.leading_coeff(), n);
  const std::size_t size = n + m;
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size, Integer(0)));
  const auto fd = f.dense();
  const auto gd = g.dense();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) a[r][r + i] = fd[n - i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) a[m + r][r + i] = gd[m - i];

  // Bareiss fraction-free elimination
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < size && a[p][k] == 0) ++p;
      if (p == size) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer det = a[size - 1][size - 1];
  return sign < 0 ? Integer(-det) : det;
}

Integer discriminant(const SparsePoly& f) {
  if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("discriminant: requires deg f >= 1");
  const Exponent n = f.degree();
  Integer r = resultant(f, derivative(f));
  Integer out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), f.leading_coeff().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) out = -out;
  return out;
}

}  // namespace lacunary
