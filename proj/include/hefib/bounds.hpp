#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hefib/indices.hpp"
#include "hefib/rational.hpp"

namespace hefib {

// Which inequality produced a genus bound.
enum class BoundSource {
  SlopeLinear,           // g <= 4chi/(4chi - ksq), from the slope inequality
  LowSlopeLinear,        // g <= (4chi+4)/(2 + 4chi - ksq), slope <= 4 case
  GenusZeroBaseLinear,   // g <= 2chi + 1, base of genus 0
  QuadraticSharp,        // g <= (l-4)^2/(4n) chi^2 + (l-4+l/(2n)) chi + n + 1
  QuadraticParityEven,   // QuadraticSharp specialized to n = 1 (even g)
  QuadraticParityOdd,    // QuadraticSharp specialized to n = 2 (odd g)
  QuadraticBaseElliptic, // g <= 25/4 chi^2 + 19/2 chi + 2, base genus 1
  QuadraticBaseHigher,   // g <= 16 chi^2 + 14 chi + 2, base genus >= 2
  HodgePositivity,       // g <= chi/(b-1) + 1, base genus >= 2
};

std::string to_string(BoundSource s);

struct GenusBound {
  Rat value;
  Int floor_value;
  BoundSource source = BoundSource::QuadraticSharp;
  bool in_domain = true;  // hypotheses of the source inequality satisfied
  std::map<std::string, Rat> params;  // inputs the bound was evaluated at

  bool operator==(const GenusBound&) const = default;
};

enum class Parity { Even, Odd };

// 4(g-1)/g, the sharp lower bound for the slope at fiber genus g >= 2.
Rat slope_lower(int g);

// Upper bound for the slope of a hyperelliptic fibration:
//   12 - (8g+4)/g^2   (g even),   12 - (8g+4)/(g^2-1)   (g odd);
// capped at 9 when b = 1 (surface-geography cap).
Rat slope_upper(int g, int b);

// The quadratic genus bound at slope l > 4, chi > 0, branch datum n >= 1:
//   (l-4)^2/(4n) chi^2 + (l-4 + l/(2n)) chi + n + 1.
// Computable for any l; callers flag l <= 4 as outside-hypothesis.
Rat genus_bound_quadratic(const Rat& lambda, const Rat& chi, const Int& n);

// Upper bound for the branch datum n at slope l > 4:
//   n <= ((l-4)/2 + l/(g-1)) chi.
Rat n_upper(const Rat& lambda, const Rat& chi, int g);

// General-purpose genus bound from (chi, b) and optionally ksq.
//   * ksq given and ksq <= 4chi: linear bound (4chi+4)/(2+4chi-ksq);
//   * otherwise: 2chi+1 for b=0, 25/4 chi^2+19/2 chi+2 for b=1,
//     16 chi^2+14 chi+2 for b >= 2.
GenusBound genus_bound(const Rat& chi, int b, std::optional<Rat> ksq);

// g <= chi/(b-1) + 1 for fibrations with b >= 2 (Hodge positivity).
GenusBound hodge_bound(const Rat& chi, int b);

// Parity-refined quadratic bounds (even g forces n >= 1, odd g forces
// n even >= 2):
//   even: (l-4)^2/4 chi^2 + (3l/2-4) chi + 2
//   odd:  (l-4)^2/8 chi^2 + (5l/4-4) chi + 3
Rat parity_refined_bound(const Rat& lambda, const Rat& chi, Parity parity);

struct QuadraticExtremes {
  Rat min_value;
  Rat max_value;
  Int argmin_n;  // smallest n attaining the min
  Int argmax_n;  // smallest n attaining the max
};

// Exact scan of genus_bound_quadratic over integer n in [n_lo, n_hi].
QuadraticExtremes quadratic_bound_extremes(const Rat& lambda, const Rat& chi,
                                           const Int& n_lo, const Int& n_hi);

// Coefficient of s_j in the chi lower bound below; j in {3, ..., g+2}.
Rat chi_lower_coefficient(int g, int j, int b);

// Lower bound for chi forced by the slope cap:
//   chi >= g/(5g+4) * slope_excess(si)   (b = 1, cap 9)
//   chi >  g/(8g+4) * slope_excess(si)   (b >= 2, cap 12)
// returned as the right-hand side.
Rat chi_lower_from_indices(const SingularityIndices& si, int b);

// Indices j whose unit contribution to the chi lower bound already exceeds
// chi, so every feasible vector has s_j = 0. Strict comparison for b = 1
// (the bound is non-strict), >= for b >= 2 (the bound is strict).
std::vector<int> forced_zero_indices(int g, const Rat& chi, int b);

// Upper bound for ksq when the surface carries an isolated curve of
// self-intersection -m (m >= 1):  ksq <= 9 chi - (m+1)^2/(4m).
Rat minus_curve_ksq_cap(const Int& m, const Rat& chi);

// Largest real g satisfying (g-2)/(2(g-1)) <= ksq - (8g-14)/(g-1) chi,
// the constraint active when s_2 < 0. std::nullopt when the inequality does
// not bound g from above (coefficient of g nonpositive).
std::optional<Rat> s2_negative_genus_cap(const Rat& ksq, const Rat& chi);

// g <= 4chi/(4chi - ksq), valid for 0 < ksq < 4chi.
Rat slope_linear_bound(const Rat& chi, const Rat& ksq);

// The bound list a caller with flags (chi, b [, ksq] [, lambda] [, n]) is
// entitled to, sorted ascending by value; used by the CLI. Throws on
// inconsistent flags (lambda != ksq/chi, or n without a slope).
std::vector<GenusBound> applicable_bounds(const Rat& chi, int b,
                                          std::optional<Rat> ksq,
                                          std::optional<Rat> lambda,
                                          std::optional<Int> n);

}  // namespace hefib
