#include "lacunary/trinomial.hpp"

#include <stdexcept>

#include "lacunary/binomial_gcd.hpp"

namespace lacunary {

void TrinomialSpec::validate() const {
  if (a <= 0 || b <= 0) throw std::invalid_argument("trinomial: a and b must be positive");
  if (!(n > m && m > 0)) throw std::invalid_argument("trinomial: exponents must satisfy n > m > 0");
  if (eps1 != 1 && eps1 != -1) throw std::invalid_argument("trinomial: eps1 must be +1 or -1");
  if (eps2 != 1 && eps2 != -1) throw std::invalid_argument("trinomial: eps2 must be +1 or -1");
  if (u < 1) throw std::invalid_argument("trinomial: u must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("trinomial: p must be prime");
}

SparsePoly TrinomialSpec::to_poly() const {
  return SparsePoly(std::vector<Term>{{n, a}, {m, Integer(b * eps1)}, {0, Integer(prime_power() * eps2)}});
}

std::optional<TrinomialSpec> trinomial_from_poly(const SparsePoly& f) {
  if (f.term_count() != 3 || f.terms()[0].exp != 0 || f.leading_coeff() <= 0) return std::nullopt;
  const Integer c = abs(f.terms()[0].coeff);
  if (c < 2) return std::nullopt;
  const auto pp = prime_power_decompose(c);
  if (!pp) return std::nullopt;
  TrinomialSpec t;
  t.a = f.leading_coeff();
  t.n = f.degree();
  t.b = abs(f.terms()[1].coeff);
  t.eps1 = sgn(f.terms()[1].coeff);
  t.m = f.terms()[1].exp;
  t.p = pp->p;
  t.u = pp->u;
  t.eps2 = sgn(f.terms()[0].coeff);
  return t;
}

Integer trinomial_discriminant(const Integer& lead, Exponent n, const Integer& mid, Exponent m,
                               const Integer& constant) {
  if (!(n > m && m >= 1)) throw std::invalid_argument("trinomial discriminant: requires n > m >= 1");
  if (lead == 0 || mid == 0 || constant == 0)
    throw std::invalid_argument("trinomial discriminant: coefficients must be nonzero");
  const Exponent d = gcd_int(n, m);
  const Exponent big = n / d;
  const Exponent small = m / d;
  const Integer nn = static_cast<unsigned long>(n);
  const Integer mm = static_cast<unsigned long>(m);
  const Integer gap = static_cast<unsigned long>(n - m);

  Integer first = ipow(nn, big) * ipow(constant, big - small) * ipow(lead, small);
  Integer second = ipow(gap, big - small) * ipow(mm, small) * ipow(mid, big);
  if (big % 2 == 1) second = -second;
  const Integer bracket = first - second;

  Integer disc = ipow(constant, m - 1) * ipow(lead, n - m - 1) * ipow(bracket, d);
  // (-1)^(n choose 2)
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

Integer discriminant_monic_trinomial(Exponent n, Exponent m, const Integer& a, const Integer& b) {
  return trinomial_discriminant(1, n, a, m, b);
}

Integer discriminant_general_trinomial(const TrinomialSpec& t) {
  t.validate();
  return trinomial_discriminant(t.a, t.n, t.b * t.eps1, t.m, t.prime_power() * t.eps2);
}

namespace {

// s*x + t*y = gcd(x, y)
void bezout(long x, long y, long& s, long& t) {
  long old_r = x, r = y, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * cur_s;
    std::swap(old_s, cur_s);
    old_t -= q * cur_t;
    std::swap(old_t, cur_t);
  }
  s = old_s;
  t = old_t;
}

mpq_class rational_pow(const mpq_class& base, long e) {
  mpq_class b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

// For coprime n, m a repeated root r satisfies r^n = mC / (A(n-m)) and
// r^m = -nC / (B(n-m)); Bezout recovers r itself.
std::optional<Integer> repeated_integer_root(const TrinomialSpec& t) {
  const Integer A = t.a;
  const Integer B = t.b * t.eps1;
  const Integer C = t.prime_power() * t.eps2;
  const Integer nn = static_cast<unsigned long>(t.n);
  const Integer mm = static_cast<unsigned long>(t.m);
  const Integer gap = static_cast<unsigned long>(t.n - t.m);
  const mpq_class rn(mm * C, A * gap);
  const mpq_class rm(-nn * C, B * gap);
  long s = 0, k = 0;
  bezout(static_cast<long>(t.n), static_cast<long>(t.m), s, k);
  mpq_class root = rational_pow(rn, s) * rational_pow(rm, k);
  root.canonicalize();
  if (root.get_den() != 1) return std::nullopt;
  const Integer r = root.get_num();
  const SparsePoly f = t.to_poly();
  if (evaluate(f, r) != 0 || evaluate(derivative(f), r) != 0) return std::nullopt;
  return r;
}

}  // namespace

Separability is_separable(const TrinomialSpec& t) {
  t.validate();
  Separability out;
  const Integer pp = t.prime_power();
  if (t.u < 2) {
    out.note = "requires u >= 2";
    return out;
  }
  if (gcd_int(t.a, t.b) != 1 || gcd_int(t.n, t.m) != 1) {
    out.note = "requires gcd(a, b) = gcd(n, m) = 1";
    return out;
  }
  if (mpz_divisible_p(t.a.get_mpz_t(), t.p.get_mpz_t()) || mpz_divisible_p(t.b.get_mpz_t(), t.p.get_mpz_t())) {
    out.note = "requires p not dividing ab";
    return out;
  }
  if (t.b >= pp) {
    out.note = "requires b < p^u";
    return out;
  }
  out.applicable = true;

  const Integer nn = static_cast<unsigned long>(t.n);
  const Integer mm = static_cast<unsigned long>(t.m);
  const Integer gap = static_cast<unsigned long>(t.n - t.m);
  const bool b_is_n = t.b == nn;
  const bool p_divides_m = mpz_divisible_p(mm.get_mpz_t(), t.p.get_mpz_t()) != 0;
  const bool power_match = ipow(pp, t.n - t.m) * ipow(t.a, t.m) == ipow(gap, t.n - t.m) * ipow(mm, t.m);
  const int sign_eps2 = ((t.n - t.m) % 2 == 1) ? t.eps2 : 1;
  const int sign_eps1 = (t.n % 2 == 1) ? -t.eps1 : 1;
  const bool sign_match = sign_eps2 * sign_eps1 == 1;
  const bool repeated = b_is_n && p_divides_m && power_match && sign_match;

  const bool disc_zero = discriminant_general_trinomial(t) == 0;
  if (disc_zero != repeated)
    throw InternalInconsistency("separability conditions disagree with the discriminant");

  out.separable = !repeated;
  if (repeated) {
    out.witness = repeated_integer_root(t);
    out.note = "b = n, p | m, p^(u(n-m)) a^m = (n-m)^(n-m) m^m and the sign condition hold";
  } else {
    out.note = "discriminant is nonzero";
  }
  return out;
}

std::string_view to_string(SeparabilityClass c) {
  switch (c) {
    case SeparabilityClass::Separable: return "Separable";
    case SeparabilityClass::ExceptionCubic: return "ExceptionCubic";
    case SeparabilityClass::ExceptionQuartic: return "ExceptionQuartic";
    case SeparabilityClass::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

SeparabilityClass classify_exception_corollary(const TrinomialSpec& t) {
  t.validate();
  const FamilyMembership fam = classify_family(t.to_poly());
  const bool family_ok = fam.in_S && (t.m == 2 || t.m == 3) && !fam.in_S_prime;
  if (!family_ok || gcd_int(t.a, t.b) != 1 || gcd_int(t.n, t.m) != 1 || t.b >= t.prime_power())
    return SeparabilityClass::NotApplicable;
  if (t.a == 1 && t.n == 3 && t.m == 2 && t.b == 3 && t.p == 2 && t.u == 2 && t.eps2 == -t.eps1)
    return SeparabilityClass::ExceptionCubic;
  if (t.a == 1 && t.n == 4 && t.m == 3 && t.b == 4 && t.p == 3 && t.u == 3 && t.eps2 == 1)
    return SeparabilityClass::ExceptionQuartic;
  return SeparabilityClass::Separable;
}

Certificate classify_equality_trinomial(const TrinomialSpec& t) {
  t.validate();
  const SparsePoly f = t.to_poly();
  Certificate cert;
  cert.criterion = Criterion::EqualityTrinomial;
  cert.verdict = Verdict::NotApplicable;
  cert.membership = classify_family(f);
  if (t.prime_power() != t.a + t.b) {
    cert.notes = "requires p^u = a + b";
    return cert;
  }
  if (!cert.membership.in_theorem_scope()) {
    cert.notes = "requires f in S_1, S'_2 or S'_3";
    return cert;
  }

  // x^n + sgn(a0 a), x^m + sgn(a0 b eps1)
  const auto fc = gcd_binomial_shape(SignedBinomial(t.n, t.eps2), SignedBinomial(t.m, t.eps1 * t.eps2));
  if (!fc) {
    cert.verdict = Verdict::Irreducible;
    cert.notes = "trivial cyclotomic part";
    return cert;
  }
  const SignedBinomial stated(gcd_int(t.n, t.m), t.eps1 == 1 ? t.eps2 : 1);
  if (!(*fc == stated)) throw InternalInconsistency("cyclotomic part differs from x^gcd(n,m) +- 1");

  SparsePoly fc_poly = fc->to_poly();
  auto q = exact_divide(f, fc_poly);
  if (!q) throw InternalInconsistency("cyclotomic part does not divide the trinomial");
  cert.verdict = Verdict::Decomposed;
  cert.f_c = std::move(fc_poly);
  cert.f_n = std::move(*q);
  cert.f_n_certified_irreducible = true;
  if (t.eps1 == 1 && t.eps2 == -1 && largest_even_part(t.n) != largest_even_part(t.m))
    cert.notes = "f(1) = a + b - p^u = 0, whatever the even parts of n and m";
  else
    cert.notes = "nontrivial cyclotomic part";
  return cert;
}

}  // namespace lacunary
