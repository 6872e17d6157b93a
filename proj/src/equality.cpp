#include "lacunary/equality.hpp"

#include <set>

#include "lacunary/binomial_gcd.hpp"

namespace lacunary {

bool is_equality_case(const SparsePoly& f) {
  const Integer a0 = f.constant_term();
  return a0 != 0 && !f.is_constant() && abs(a0) == tail_abs_sum(f);
}

Decomposition decompose_equality(const SparsePoly& f, const FamilyMembership& membership) {
  if (f.constant_term() == 0) throw std::invalid_argument("decompose_equality: constant term must be nonzero");
  if (!is_equality_case(f)) throw std::invalid_argument("decompose_equality: requires |a0| = sum of the other |coefficients|");

  Decomposition d;
  d.f_c = compute_fc(f);
  if (d.f_c.is_one()) {
    d.f_n = f;
  } else {
    auto q = exact_divide(f, d.f_c);
    // every root of f_c is a root of f under equality, and f_c is squarefree
    if (!q) throw InternalInconsistency("cyclotomic part does not divide f in the equality case");
    d.f_n = std::move(*q);
  }
  d.f_n_nonreciprocal = !is_reciprocal(d.f_n);

  if (membership.in_theorem_scope()) {
    d.f_n_certified_irreducible = true;
    d.certified_by = Criterion::CyclotomicPart;
  } else if (membership.prime_power && membership.prime_power->u == 1 && !d.f_n.is_constant() &&
             abs(content_primitive(f).content) == 1) {
    d.f_n_certified_irreducible = true;
    d.certified_by = Criterion::PrimeConstantEquality;
  }
  return d;
}

namespace {

Certificate decomposed(Criterion c, const FamilyMembership& m, Decomposition dec) {
  Certificate cert;
  cert.criterion = c;
  cert.membership = m;
  cert.verdict = Verdict::Decomposed;
  cert.f_n_certified_irreducible = dec.f_n_certified_irreducible;
  cert.f_c = std::move(dec.f_c);
  cert.f_n = std::move(dec.f_n);
  return cert;
}

Certificate not_applicable(Criterion c, const FamilyMembership& m, std::string why) {
  Certificate cert;
  cert.criterion = c;
  cert.membership = m;
  cert.verdict = Verdict::NotApplicable;
  cert.notes = std::move(why);
  return cert;
}

}  // namespace

Certificate check_positive_case(const SparsePoly& f, const FamilyMembership& membership) {
  constexpr Criterion kCrit = Criterion::PositiveCoefficients;
  for (const auto& t : f.terms())
    if (t.coeff <= 0) return not_applicable(kCrit, membership, "requires all coefficients positive");
  if (!is_equality_case(f)) return not_applicable(kCrit, membership, "requires a0 = sum of the other coefficients");
  if (!membership.in_theorem_scope()) return not_applicable(kCrit, membership, "requires f in S_1, S'_2 or S'_3");

  const Deflation defl = deflate(f);
  std::set<std::uint64_t> even_parts;
  for (const auto& t : defl.base.terms())
    if (t.exp > 0) even_parts.insert(largest_even_part(t.exp));

  if (even_parts.size() > 1) {
    Certificate cert;
    cert.criterion = kCrit;
    cert.membership = membership;
    cert.verdict = Verdict::Irreducible;
    cert.notes = "two positive exponents have different largest even parts";
    return cert;
  }
  Decomposition dec = decompose_equality(f, membership);
  if (dec.f_c.is_one()) throw InternalInconsistency("equal even parts but trivial cyclotomic part");
  Certificate cert = decomposed(kCrit, membership, std::move(dec));
  cert.notes = "all positive exponents share one largest even part";
  return cert;
}

Certificate check_consecutive_exponents(const SparsePoly& f, const FamilyMembership& membership) {
  constexpr Criterion kCrit = Criterion::ConsecutiveExponents;
  if (!is_equality_case(f)) return not_applicable(kCrit, membership, "requires |a0| = sum of the other |coefficients|");
  if (!membership.in_theorem_scope()) return not_applicable(kCrit, membership, "requires f in S_1, S'_2 or S'_3");
  bool adjacent = false;
  const auto& terms = f.terms();
  for (std::size_t i = 2; i < terms.size(); ++i)
    if (terms[i].exp == terms[i - 1].exp + 1) adjacent = true;
  if (!adjacent) return not_applicable(kCrit, membership, "requires two consecutive positive exponents");

  const bool root_one = evaluate(f, 1) == 0;
  const bool root_minus_one = evaluate(f, -1) == 0;
  if (!root_one && !root_minus_one) {
    Certificate cert;
    cert.criterion = kCrit;
    cert.membership = membership;
    cert.verdict = Verdict::Irreducible;
    cert.notes = "f(1) and f(-1) are both nonzero";
    return cert;
  }
  SparsePoly fc = SparsePoly::constant(1);
  if (root_one) fc *= SparsePoly{{1, 1}, {0, -1}};
  if (root_minus_one) fc *= SparsePoly{{1, 1}, {0, 1}};
  auto q = exact_divide(f, fc);
  if (!q) throw InternalInconsistency("x -+ 1 fails to divide f despite a root at -+1");
  Decomposition dec{fc, std::move(*q), true, false, kCrit};
  dec.f_n_nonreciprocal = !is_reciprocal(dec.f_n);
  Certificate cert = decomposed(kCrit, membership, std::move(dec));
  cert.notes = root_one && root_minus_one ? "f(1) = f(-1) = 0" : (root_one ? "f(1) = 0" : "f(-1) = 0");
  return cert;
}

}  // namespace lacunary
