#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::invalid_argument(message + " at column " + std::to_string(column)), column_(column) {}
  /// 1-based column in the source text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct PolyExpr {
  std::string source;
  /// Exactly what the text denotes.
  SparsePoly raw;
  /// raw / x^stripped_power: nonzero constant term unless raw is zero.
  SparsePoly normalized;
  Exponent stripped_power = 0;
  /// Signed content of raw (0 for the zero polynomial).
  Integer extracted_content;
};

/// poly := [sign] term (sign term)*; term := coeff | coeff '*'? var | var;
/// var := 'x' ('^' uint)?. Whitespace between tokens is ignored.
PolyExpr parse_poly(const std::string& text);

/// Descending exponents, no '*', explicit exponents >= 2: "x^2-1", "-3x", "0".
std::string format_poly(const SparsePoly& f);

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitDefinitive = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoVerdict = 2;

/// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

struct ScanParams {
  Exponent q = 5;
  Exponent max_degree = 10;
  long coeff_bound = 3;
  long pp_bound = 27;
  unsigned workers = 0;  // 0: one per hardware thread
};

struct ScanReport {
  std::uint64_t tested = 0;
  /// Reducible instances, in canonical order.
  std::vector<SparsePoly> counterexamples;
  std::chrono::duration<double> elapsed{0};
};

/// Every f in S'_q with lowest exponent q, degree <= max_degree, nonzero
/// coefficients bounded by coeff_bound, |a0| = p^u <= pp_bound and
/// p^u > tail sum, factored by the oracle. Throws std::invalid_argument when q
/// is not prime or the bounds exceed the oracle cap.
ScanReport scan_conjecture(const ScanParams& params);

}  // namespace lacunary
