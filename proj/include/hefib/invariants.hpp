#pragma once

#include <optional>

#include "hefib/indices.hpp"
#include "hefib/rational.hpp"

namespace hefib {

// Relative numerical invariants of a fibration over a genus-b base.
struct FibrationNumerics {
  int g = 2;
  int b = 1;
  Rat n;
  Rat chi;
  Rat ksq;
  Rat e;
  std::optional<Rat> lambda;  // ksq/chi, present only when chi > 0

  bool operator==(const FibrationNumerics&) const = default;
};

// Horizontal Euler contribution:
//   e = s_2 - 2 s_{g+2} + sum_{k=1}^{[g/2]} s_{2k+1}
//       + 2 sum_{k=2}^{[(g+1)/2]} s_{2k}.
Int e_from_indices(const SingularityIndices& si);

// The quantity n = R^2 / (4(g+1)) of the double-cover branch data, recovered
// from the indices through the relation
//   2n(2g+1) = e + (g+1)(2g+4) s_{g+2}
//              + sum_{k=1}^{[g/2]} (8k^2+4k-1) s_{2k+1}
//              + sum_{k=2}^{[(g+1)/2]} (4k^2-2k-2) s_{2k}.
// Exact rational; integrality is a separate check (validate_n).
Rat n_from_indices(const SingularityIndices& si);

// True iff n is a positive integer, and additionally even when g is odd
// (2-divisibility of the branch class on the relatively minimal model).
bool validate_n(int g, const Rat& n);

// chi of the fibration through the branch datum n:
//   chi = g n / 2 - sum_{k=1}^{[(g+1)/2]} k^2 s_{2k+1}
//         - sum_{k=2}^{[(g+1)/2]} k(k-1)/2 s_{2k}.
// For odd g the top odd term (k = (g+1)/2) addresses j = g+2.
Rat chi_via_n(const SingularityIndices& si, const Rat& n);

// chi written purely in the indices:
//   chi = [g s_2 + (g^2-2g-1) s_{g+2}] / (4(2g+1))
//         + sum_{k=1}^{[g/2]} k(g-k)/(2g+1) s_{2k+1}
//         + sum_{k=2}^{[(g+1)/2]} k(g-k+1)/(2(2g+1)) s_{2k}.
Rat chi_from_indices(const SingularityIndices& si);

// K^2 through n:
//   ksq = (2g-2) n + s_{g+2} - sum_{k=1}^{[(g+1)/2]} (2k-1)^2 s_{2k+1}
//         - sum_{k=2}^{[(g+1)/2]} 2(k-1)^2 s_{2k}.
// Odd g: the odd sum's top term also addresses j = g+2, alongside the
// dedicated +s_{g+2}.
Rat ksq_via_n(const SingularityIndices& si, const Rat& n);

// K^2 purely in the indices:
//   ksq = (g-1)(s_2 + (3g+1) s_{g+2})/(2g+1)
//         + sum_{k=1}^{[g/2]} (12k(g-k)-2g-1)/(2g+1) s_{2k+1}
//         + sum_{k=2}^{[(g+1)/2]} (6k(g-k+1)-4g-2)/(2g+1) s_{2k}.
Rat ksq_from_indices(const SingularityIndices& si);

// ksq - 4(g-1)/g * chi, expanded to the nonnegative-coefficient form
//   [ (g^2-1) s_{g+2} + sum_{k=1}^{[g/2]} (4k(g-k)-g) s_{2k+1}
//     + sum_{k=2}^{[(g+1)/2]} (2k(g-k+1)-2g) s_{2k} ] / g.
// Note s_2 does not appear.
Rat slope_excess(const SingularityIndices& si);

// Coefficient of s_j in the denominator-cleared chi equation
//   4(2g+1) chi = g s_2 + sum_{j>=3} chi_equation_coeff(g, j) s_j.
// Defined for j in {3, ..., g+2}.
Int chi_equation_coeff(int g, int j);

// Coefficient of s_j in g * slope_excess. Defined for j in {3, ..., g+2};
// zero only for (g, j) = (2, 4), a slot that is itself forced to vanish.
Int slope_excess_numer_coeff(int g, int j);

// Full record. Throws ValidationError if the indices are malformed or n fails
// validate_n (parity enforcement optional: the enumerator's relaxed mode
// accepts odd n for odd g). Internal cross-check: both chi forms and both ksq
// forms must agree, and 12 chi = ksq + e; disagreement is a logic_error.
FibrationNumerics compute_numerics(const SingularityIndices& si, int b,
                                   bool require_parity = true);

}  // namespace hefib
