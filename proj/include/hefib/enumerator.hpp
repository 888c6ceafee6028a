#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hefib/indices.hpp"
#include "hefib/invariants.hpp"
#include "hefib/rational.hpp"

namespace hefib {

enum class S2Mode { NonNegative, Negative, Any };
enum class SlopeCapKind { MiyaokaYau9, Hyperelliptic, Custom };

std::string to_string(S2Mode m);
std::string to_string(SlopeCapKind k);

struct SearchSpec {
  Rat chi = 1;
  int b = 1;
  int g_lo = 2;
  int g_hi = 60;
  S2Mode s2_mode = S2Mode::Any;
  SlopeCapKind cap_kind = SlopeCapKind::MiyaokaYau9;
  Rat custom_cap = 0;  // active slope cap when cap_kind == Custom
  // Odd g forces even n on an actual fibration; the relaxed setting keeps
  // only integrality, mirroring arguments that never use the parity.
  bool require_n_parity = true;
  std::optional<Int> ksq_lo;
  std::optional<Int> ksq_hi;

  void validate() const;
  Rat slope_cap(int g) const;
};

struct FeasibleCase {
  SingularityIndices indices;
  FibrationNumerics numerics;

  int g() const { return indices.g; }
  Int ksq() const { return numerator(numerics.ksq); }
  Int n() const { return numerator(numerics.n); }

  bool operator==(const FeasibleCase&) const = default;
};

// Exhaustive search for index vectors matching the spec. Every returned case
// satisfies, exactly:
//   (i)    chi_from_indices = spec.chi;
//   (ii)   n integral >= 1 (and even for odd g unless relaxed);
//   (iii)  s_2 sign per s2_mode;
//   (iv)   s_{g+2} = 0 for even g;
//   (v)    ksq integral, within [ksq_lo, ksq_hi] when given;
//   (vi)   slope_lower(g) * chi <= ksq <= slope_cap(g) * chi;
//   (vii)  e >= 0;
//   (viii) when s_2 < 0: ksq <= floor(minus_curve_ksq_cap(2, chi)).
// Rule (viii) is a consequence of s_2 < 0 (an isolated negative curve
// exists), so it applies to negative-s_2 vectors in every mode; mode Any is
// therefore exactly the union of the NonNegative and Negative searches.
// Output sorted by (g, ksq, index vector); deterministic. Honors the
// HEFIB_WORKERS environment variable for parallelism over g.
std::vector<FeasibleCase> enumerate_cases(const SearchSpec& spec);

// Largest fiber genus among the matches, std::nullopt when none.
std::optional<int> max_genus(const SearchSpec& spec);

// One (ksq, g) pair present on exactly one side of the comparison between
// the enumeration and the reference table.
struct TableDiscrepancy {
  Int ksq;
  int g;
  bool extra = true;  // true: enumerated but not in the reference table
  std::optional<FeasibleCase> witness;
};

struct ClassifyResult {
  std::vector<FeasibleCase> cases;
  std::map<Int, std::set<int>> table;  // ksq -> attained fiber genera
  std::vector<TableDiscrepancy> discrepancies;
  bool matches_reference = false;
  bool high_genus_rows_match = false;  // comparison restricted to g >= 11
  std::vector<std::string> constraint_families;  // filters the search applied
};

// The previously tabulated classification for chi = 1 over a genus-1 base,
// kept as the regression baseline the enumeration is compared against.
const std::map<Int, std::set<int>>& reference_classification();

// Fixed search: chi = 1, b = 1, g in [2, 60], union of both s_2 signs,
// integrality of n only (no parity), slope capped at 9. Compares against
// reference_classification() and reports every difference; never prunes to
// match.
ClassifyResult classify_pg_q_1();

}  // namespace hefib
