#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

/// Raised when an identity that must hold exactly fails: an implementation bug,
/// never a property of the input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ExclusionReason {
  NotPrimePower,        // |a0| is not a prime power
  ExponentBelowTwo,     // |a0| = p^u with u < 2
  PrimeDividesLowest,   // p | a_{n1}
  PrimeDividesLeading,  // p | a_{nr}
};

std::string_view to_string(ExclusionReason r);

/// Membership of f = a_{nr} x^{nr} + ... + a_{n1} x^{n1} + a0 in the
/// prime-power families S_{n1} and S'_{n1}.
struct FamilyMembership {
  Exponent n1 = 0;
  Exponent nr = 0;
  std::optional<PrimePower> prime_power;
  int epsilon = 1;
  Integer tail_sum;
  bool in_S = false;
  bool in_S_prime = false;
  std::optional<ExclusionReason> exclusion_reason;

  /// f is in S_1, S'_2 or S'_3: the families where the strict and equality
  /// theorems apply.
  bool in_theorem_scope() const { return in_S && (n1 == 1 || ((n1 == 2 || n1 == 3) && in_S_prime)); }
  /// |a0| as p^u, when it is a prime power.
  std::optional<Integer> prime_power_value() const;
};

enum class Verdict { Irreducible, Decomposed, NotApplicable, Unknown };

enum class Criterion {
  PrimePowerStrict,       // "mainthm"
  PanitopolStefanescu,    // "panitopol_stefanescu"
  Perron,                 // "perron"
  CyclotomicPart,         // "cyclothm"
  PositiveCoefficients,   // "cor_pos"
  ConsecutiveExponents,   // "consecutive_exponents"
  EqualityTrinomial,      // "redoftri"
  PrimeConstantEquality,  // "prior_work_u1"
  Oracle,                 // "oracle"
};

std::string_view to_string(Verdict v);
std::string_view to_string(Criterion c);

/// Outcome of one criterion. criterion names the test that was evaluated,
/// whatever the verdict.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  Criterion criterion = Criterion::Oracle;
  FamilyMembership membership;
  std::optional<SparsePoly> f_c;
  std::optional<SparsePoly> f_n;
  bool f_n_certified_irreducible = false;
  std::string notes;
};

/// Requires f nonconstant with f(0) != 0; throws std::invalid_argument otherwise.
FamilyMembership classify_family(const SparsePoly& f);

/// p^u > tail sum on S_1, S'_2, S'_3, or |a0| = p prime with p > tail sum.
Certificate check_strict(const SparsePoly& f);

/// Perron: monic, |a_{n-1}| > 1 + |a_{n-2}| + ... + |a_0|.
Certificate check_perron(const SparsePoly& f);

/// |a0| > tail sum, which rules out roots with |z| <= 1. false means no claim.
bool no_root_in_closed_unit_disk(const SparsePoly& f);

/// Upper bound on the number of non-reciprocal irreducible factors, when one
/// of the strict-inequality results provides it.
std::optional<Exponent> max_nonreciprocal_factor_bound(const SparsePoly& f);

}  // namespace lacunary
