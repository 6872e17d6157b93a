#include "lacunary/criteria.hpp"

#include <stdexcept>

namespace lacunary {

std::string_view to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::NotPrimePower: return "a0_not_prime_power";
    case ExclusionReason::ExponentBelowTwo: return "u_below_2";
    case ExclusionReason::PrimeDividesLowest: return "p_divides_a_n1";
    case ExclusionReason::PrimeDividesLeading: return "p_divides_a_nr";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::Decomposed: return "Decomposed";
    case Verdict::NotApplicable: return "NotApplicable";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::PrimePowerStrict: return "mainthm";
    case Criterion::PanitopolStefanescu: return "panitopol_stefanescu";
    case Criterion::Perron: return "perron";
    case Criterion::CyclotomicPart: return "cyclothm";
    case Criterion::PositiveCoefficients: return "cor_pos";
    case Criterion::ConsecutiveExponents: return "consecutive_exponents";
    case Criterion::EqualityTrinomial: return "redoftri";
    case Criterion::PrimeConstantEquality: return "prior_work_u1";
    case Criterion::Oracle: return "oracle";
  }
  return "oracle";
}

std::optional<Integer> FamilyMembership::prime_power_value() const {
  if (!prime_power) return std::nullopt;
  return prime_power->value();
}

namespace {

void require_classifiable(const SparsePoly& f) {
  if (f.is_constant()) throw std::invalid_argument("polynomial must be nonconstant");
  if (f.constant_term() == 0) throw std::invalid_argument("constant term must be nonzero; strip x^k first");
}

bool divides(const Integer& p, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0; }

}  // namespace

FamilyMembership classify_family(const SparsePoly& f) {
  require_classifiable(f);
  FamilyMembership m;
  const Integer a0 = f.constant_term();
  m.n1 = f.terms()[1].exp;
  m.nr = f.degree();
  m.epsilon = sgn(a0);
  m.tail_sum = tail_abs_sum(f);
  const Integer abs_a0 = abs(a0);
  if (abs_a0 >= 2) m.prime_power = prime_power_decompose(abs_a0);

  if (!m.prime_power)
    m.exclusion_reason = ExclusionReason::NotPrimePower;
  else if (m.prime_power->u < 2)
    m.exclusion_reason = ExclusionReason::ExponentBelowTwo;
  else if (divides(m.prime_power->p, f.terms()[1].coeff))
    m.exclusion_reason = ExclusionReason::PrimeDividesLowest;
  else if (divides(m.prime_power->p, f.leading_coeff()))
    m.exclusion_reason = ExclusionReason::PrimeDividesLeading;

  m.in_S = !m.exclusion_reason;
  // u mod 1 is always 0, so S'_1 is empty
  m.in_S_prime = m.in_S && (m.prime_power->u % m.n1 != 0);
  return m;
}

Certificate check_strict(const SparsePoly& f) {
  Certificate cert;
  cert.membership = classify_family(f);
  const auto& m = cert.membership;
  cert.criterion = Criterion::PrimePowerStrict;
  cert.verdict = Verdict::NotApplicable;

  if (m.prime_power && m.prime_power->u == 1) {
    cert.criterion = Criterion::PanitopolStefanescu;
    if (m.prime_power->p > m.tail_sum) {
      cert.verdict = Verdict::Irreducible;
      cert.notes = "|a0| is a prime exceeding the sum of the other |coefficients|";
    } else {
      cert.notes = "|a0| is prime but does not exceed the tail sum";
    }
    return cert;
  }
  if (!m.in_S) {
    cert.notes = std::string("not in S_n1: ") + std::string(to_string(*m.exclusion_reason));
    return cert;
  }
  if (!m.in_theorem_scope()) {
    cert.notes = m.n1 > 3 ? "lowest exponent n1 > 3 is outside S_1, S'_2, S'_3"
                          : "u is divisible by n1 (in S_n1 but not S'_n1)";
    return cert;
  }
  if (m.prime_power_value() > m.tail_sum) {
    cert.verdict = Verdict::Irreducible;
    cert.notes = "p^u exceeds the sum of the other |coefficients|";
  } else {
    cert.notes = "p^u does not exceed the tail sum";
  }
  return cert;
}

Certificate check_perron(const SparsePoly& f) {
  Certificate cert;
  cert.criterion = Criterion::Perron;
  cert.verdict = Verdict::NotApplicable;
  cert.membership = classify_family(f);
  if (f.leading_coeff() != 1) {
    cert.notes = "Perron's criterion requires a monic polynomial";
    return cert;
  }
  const Exponent n = f.degree();
  if (n < 2) {
    cert.notes = "Perron's criterion requires degree >= 2";
    return cert;
  }
  const Integer sub = abs(f.coeff(n - 1));
  Integer rest = 1;
  for (const auto& t : f.terms())
    if (t.exp < n - 1) rest += abs(t.coeff);
  if (sub > rest) {
    cert.verdict = Verdict::Irreducible;
    cert.notes = "|a_{n-1}| exceeds 1 + sum of the lower |coefficients|";
  } else {
    cert.notes = "|a_{n-1}| does not exceed 1 + sum of the lower |coefficients|";
  }
  return cert;
}

bool no_root_in_closed_unit_disk(const SparsePoly& f) {
  const Integer a0 = f.constant_term();
  if (a0 == 0) throw std::invalid_argument("constant term must be nonzero");
  return abs(a0) > tail_abs_sum(f);
}

std::optional<Exponent> max_nonreciprocal_factor_bound(const SparsePoly& f) {
  // only the prime-power theorem counts here; a prime |a0| gives no bound
  const Certificate strict = check_strict(f);
  if (strict.verdict == Verdict::Irreducible && strict.criterion == Criterion::PrimePowerStrict) return 1;
  const FamilyMembership m = classify_family(f);
  if (m.in_S && (m.n1 == 2 || m.n1 == 3) && m.prime_power_value() > m.tail_sum) return m.n1;
  return std::nullopt;
}

}  // namespace lacunary
