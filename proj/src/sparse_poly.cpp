#include "lacunary/sparse_poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace lacunary {

SparsePoly::SparsePoly(std::initializer_list<std::pair<Exponent, long>> terms) {
  terms_.reserve(terms.size());
  for (const auto& [e, c] : terms) terms_.push_back({e, Integer(c)});
  canonicalize();
}

SparsePoly::SparsePoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

SparsePoly SparsePoly::constant(const Integer& c) { return monomial(c, 0); }

SparsePoly SparsePoly::monomial(const Integer& c, Exponent e) {
  SparsePoly r;
  if (c != 0) r.terms_.push_back({e, c});
  return r;
}

SparsePoly SparsePoly::binomial(Exponent n, long s) { return SparsePoly{{n, 1}, {0, s}}; }

SparsePoly SparsePoly::from_dense(const std::vector<Integer>& coeffs) {
  SparsePoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) r.terms_.push_back({i, coeffs[i]});
  return r;
}

void SparsePoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

Exponent SparsePoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.back().exp;
}

Exponent SparsePoly::lowest_exponent() const {
  if (terms_.empty()) throw std::domain_error("lowest exponent of the zero polynomial");
  return terms_.front().exp;
}

const Integer& SparsePoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.back().coeff;
}

Integer SparsePoly::constant_term() const {
  return (!terms_.empty() && terms_.front().exp == 0) ? terms_.front().coeff : Integer(0);
}

Integer SparsePoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  return (it != terms_.end() && it->exp == e) ? it->coeff : Integer(0);
}

std::vector<Integer> SparsePoly::dense() const {
  if (terms_.empty()) return {};
  std::vector<Integer> out(terms_.back().exp + 1);
  for (const auto& t : terms_) out[t.exp] = t.coeff;
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& g) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& g) { return *this += -g; }

SparsePoly& SparsePoly::operator*=(const SparsePoly& g) { return *this = *this * g; }

SparsePoly& SparsePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back({a.exp + b.exp, a.coeff * b.coeff});
  return SparsePoly(std::move(prod));
}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) { return f + g; }

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) { return f * g; }

Integer evaluate(const SparsePoly& f, const Integer& t) {
  const auto& terms = f.terms();
  if (terms.empty()) return 0;
  Integer acc = 0;
  Integer power;
  // Horner from the top, jumping over gaps.
  for (std::size_t i = terms.size(); i-- > 0;) {
    acc += terms[i].coeff;
    const Exponent gap = terms[i].exp - (i > 0 ? terms[i - 1].exp : 0);
    if (gap > 0) {
      mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), gap);
      acc *= power;
    }
  }
  return acc;
}

SparsePoly derivative(const SparsePoly& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.exp > 0) out.push_back({t.exp - 1, t.coeff * Integer(static_cast<unsigned long>(t.exp))});
  return SparsePoly(std::move(out));
}

SparsePoly reciprocal(const SparsePoly& f) {
  if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
  const Exponent n = f.degree();
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) out.push_back({n - t.exp, t.coeff});
  return SparsePoly(std::move(out));
}

bool is_reciprocal(const SparsePoly& f) {
  const SparsePoly r = reciprocal(f);
  return r == f || r == -f;
}

std::optional<SparsePoly> exact_divide(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  if (f.is_zero()) return SparsePoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  if (f.lowest_exponent() < g.lowest_exponent()) return std::nullopt;
  const Integer& lc = g.leading_coeff();
  const Exponent dg = g.degree();
  {
    // cheap filters on the extreme terms
    const auto& fl = f.terms().front();
    const auto& gl = g.terms().front();
    if (!mpz_divisible_p(fl.coeff.get_mpz_t(), gl.coeff.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(f.leading_coeff().get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
  }
  std::map<Exponent, Integer, std::greater<>> rem;
  for (const auto& t : f.terms()) rem.emplace(t.exp, t.coeff);
  std::vector<Term> quotient;
  Integer q;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (lead->first < dg) return std::nullopt;
    if (!mpz_divisible_p(lead->second.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), lead->second.get_mpz_t(), lc.get_mpz_t());
    const Exponent shift = lead->first - dg;
    rem.erase(lead);
    for (std::size_t i = 0; i + 1 < g.term_count(); ++i) {
      const Term& t = g.terms()[i];
      auto [it, inserted] = rem.try_emplace(t.exp + shift);
      it->second -= q * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({shift, q});
    // terms below the lowest exponent of g can never be cancelled
    if (!rem.empty() && rem.rbegin()->first < g.lowest_exponent()) return std::nullopt;
  }
  return SparsePoly(std::move(quotient));
}

ContentPrimitive content_primitive(const SparsePoly& f) {
  if (f.is_zero()) throw std::domain_error("content of the zero polynomial");
  Integer g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (f.leading_coeff() < 0) g = -g;
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Integer c;
    mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    out.push_back({t.exp, std::move(c)});
  }
  return {g, SparsePoly(std::move(out))};
}

namespace {

// Pseudo-remainder of a by b, scaled down by its content at every step.
SparsePoly primitive_prem(SparsePoly a, const SparsePoly& b) {
  const Exponent db = b.degree();
  const Integer& lb = b.leading_coeff();
  while (!a.is_zero() && a.degree() >= db) {
    const SparsePoly lead = SparsePoly::monomial(a.leading_coeff(), a.degree() - db);
    a = a * lb - lead * b;
    if (!a.is_zero()) a = content_primitive(a).primitive;
  }
  return a;
}

}  // namespace

SparsePoly gcd_poly(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd_poly: both arguments are zero");
  if (f.is_zero()) return content_primitive(g).primitive;
  if (g.is_zero()) return content_primitive(f).primitive;
  SparsePoly a = content_primitive(f).primitive;
  SparsePoly b = content_primitive(g).primitive;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (true) {
    if (b.degree() == 0) return SparsePoly::constant(1);
    SparsePoly r = primitive_prem(std::move(a), b);
    if (r.is_zero()) return b;
    a = std::move(b);
    b = content_primitive(r).primitive;
  }
}

const SparsePoly& cyclotomic(Exponent d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: d must be >= 1");
  static std::mutex mutex;
  static std::unordered_map<Exponent, SparsePoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  SparsePoly phi = SparsePoly::binomial(d, -1);
  for (Exponent e = 1; e < d; ++e) {
    if (d % e) continue;
    auto q = exact_divide(phi, cyclotomic(e));
    if (!q) throw std::logic_error("cyclotomic: proper divisor factor failed to divide");
    phi = std::move(*q);
  }
  std::lock_guard lock(mutex);
  // unordered_map never moves its nodes, so handing out references is safe
  return cache.emplace(d, std::move(phi)).first->second;
}

SparsePoly inflate(const SparsePoly& f, Exponent d) {
  if (d == 0) throw std::invalid_argument("inflate: d must be >= 1");
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.exp *= d;
  return SparsePoly(std::move(out));
}

Deflation deflate(const SparsePoly& f) {
  if (f.is_zero()) throw std::domain_error("deflate of the zero polynomial");
  Exponent d = 0;
  for (const auto& t : f.terms()) d = gcd_int(d, t.exp);
  if (d == 0) d = 1;
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.exp /= d;
  return {SparsePoly(std::move(out)), d};
}

std::pair<Exponent, SparsePoly> strip_x_power(const SparsePoly& f) {
  if (f.is_zero()) return {0, f};
  const Exponent k = f.lowest_exponent();
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.exp -= k;
  return {k, SparsePoly(std::move(out))};
}

Integer tail_abs_sum(const SparsePoly& f) {
  Integer s = 0;
  for (const auto& t : f.terms())
    if (t.exp > 0) s += abs(t.coeff);
  return s;
}

}  // namespace lacunary
