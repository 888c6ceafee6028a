#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hefib/indices.hpp"
#include "hefib/invariants.hpp"
#include "hefib/rational.hpp"

namespace hefib {

// Numerical intersection theory on a P^1-bundle over an elliptic curve,
// possibly blown up in one point. Two bundle types appear:
//   SplitTorsion: split bundle twisted by a torsion line bundle of order m.
//     Basis (C0, Gamma) with C0^2 = 0, C0.Gamma = 1, Gamma^2 = 0.
//     Canonical class K = -2 C0.
//   IndecDeg1: indecomposable bundle of degree 1.
//     Basis (C, Gamma) with C^2 = 1, C.Gamma = 1, Gamma^2 = 0.
//     Canonical class K = -2 C + Gamma.
// The base being elliptic, the relative and absolute canonical classes
// coincide, and chi(O) = 0 for the bundle and every blow-up of it.
enum class SurfaceKind { SplitTorsion, IndecDeg1 };

std::string to_string(SurfaceKind k);

struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::SplitTorsion;
  // Order of the twisting torsion bundle; only meaningful for SplitTorsion,
  // where it constrains which section classes carry irreducible curves.
  long long torsion_order = 0;
  int blowups = 0;  // number of exceptional classes (0 or 1 here)
};

// Class a*section + b*Gamma - sum exc[i]*E_i. A positive exc entry is the
// multiplicity at the blown-up point; the exceptional curve E_i itself is
// encoded with exc[i] = -1.
struct DivisorClass {
  long long a = 0;
  long long b = 0;
  std::vector<long long> exc;

  bool operator==(const DivisorClass&) const = default;
};

Int intersect(const SurfaceModel& p, const DivisorClass& d1,
              const DivisorClass& d2);
DivisorClass canonical(const SurfaceModel& p);
DivisorClass subtract(const DivisorClass& d1, const DivisorClass& d2);

// Arithmetic genus 1 + D(D+K)/2.
Rat adjunction_genus(const SurfaceModel& p, const DivisorClass& d);

// A double cover branched over a class with section coefficient 2g+2 has
// fibers of genus g. Requires an even coefficient of at least 6.
int fiber_genus_from_branch(const DivisorClass& r);

// The fiber-class coefficient n of the branch written as
// -(g+1)K + n*Gamma, read off the image of the branch on the minimal model
// (exceptional multiplicities do not enter).
Rat branch_n(const SurfaceModel& p, const DivisorClass& r);

// Exact half of a 2-divisible class; rejects odd coordinates.
DivisorClass halve_even_class(const DivisorClass& d);

struct DoubleCoverInvariants {
  Rat chi;
  Rat ksq;
};

// Invariants of the double cover branched over the smooth even class r,
// with delta = r/2:
//   chi = 2 chi(O_P) + delta(delta + K)/2,  ksq = 2 (K + delta)^2,
// and chi(O_P) = 0 throughout (elliptic ruled, blow-ups do not change it).
DoubleCoverInvariants double_cover_invariants(const SurfaceModel& p,
                                              const DivisorClass& r);

// The intersection-theoretic singularity index of a smooth branch class:
// s_2 = (K + R) . R.
Int s2_of_smooth_branch(const SurfaceModel& p, const DivisorClass& r);

// ---------------------------------------------------------------------------
// The three example families certifying sharpness of the genus bounds.

enum class ExampleFamily { Ex51, Ex52, Ex53 };

std::string to_string(ExampleFamily f);

struct ExampleParams {
  ExampleFamily family = ExampleFamily::Ex51;
  long long k = 0;               // ex51: odd k >= 3; ex52: odd k >= 1
  std::optional<long long> m;    // ex51 torsion order, >= k+2; default k+2
  Int n = 0;                     // ex53: fiber coefficient, >= 1
  Rat chi = 0;                   // ex53: target chi, integral >= 6
};

struct ExampleSurface {
  ExampleParams params;
  SurfaceModel model;         // surface carrying the smooth branch
  DivisorClass branch;        // smooth branch class on that surface
  DivisorClass delta;         // half of the branch class
  SingularityIndices indices;
  FibrationNumerics numerics;      // index-formula route, base genus 1
  DoubleCoverInvariants cover;     // intersection-theory route
  Rat n;                           // from branch_n
};

// Assembles one member of a family, checking the family's parameter
// hypotheses. ex52 with k = 1 keeps the branch on the un-blown-up bundle:
// its only singularity is a negligible double point, which feeds s_2
// instead of a separate index.
ExampleSurface build_example(const ExampleParams& p);

// Constraints cutting the horizontal classes down to those that can carry
// irreducible curves on the blown-up bundle.
struct FamilyConstraints {
  // SplitTorsion with b = 0: only a = 1 (a section) or a >= torsion_order.
  long long torsion_order = 0;
  // The blown-up point avoids the distinguished sections, so an a = 1,
  // b = 0 class passes through it with multiplicity 0.
  bool sections_avoid_center = true;
  // IndecDeg1 classes with a + 2b = 0 are multiples of the anticanonical
  // pullback, which misses the blown-up point: multiplicity 0.
  bool anticanonical_beta_zero = true;
};

struct MinPairing {
  Int minimum = 0;
  DivisorClass witness;
  std::string witness_kind;  // "tau*Gamma", "tau*Gamma-E", "E", "horizontal"
  long long box_primary = 0;
  long long box_extended = 0;
  bool stable = false;  // extended box found nothing below the primary box
};

// Minimum of L . D over candidate curve classes D: the fiber pullback, the
// strict transform of the fiber through the blown-up point, the exceptional
// curve, and every horizontal class (a, b, beta) passing the family
// constraints and the adjunction inequality, with |a|, |b| up to the box and
// beta at its adjunction cap (L . D is nonincreasing in beta for the
// divisors tested here). Scans the primary box, re-scans the extended box,
// and reports whether the wider scan agreed. Ties keep the earliest
// candidate: specials in the order above, then horizontals by (a, b).
// Honors HEFIB_WORKERS for slicing over a; the reduction is deterministic.
MinPairing min_L_dot_D(const SurfaceModel& p, const DivisorClass& l,
                       const FamilyConstraints& fc, long long box_primary = 60,
                       long long box_extended = 600);

struct AmpleProbe {
  SurfaceModel model;  // always the blown-up bundle
  DivisorClass l;      // branch minus canonical on that bundle
  FamilyConstraints constraints;
};

// The divisor whose pairing minimum certifies base-point-freeness of the
// branch system: L = R - K on the blow-up. For ex52 with k = 1 this lives
// on the blown-up bundle even though the branch bookkeeping does not.
AmpleProbe ample_test_divisor(const ExampleParams& p);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  std::vector<CheckLine> checks;
};

// Exact certification of one example: the two invariant routes agree, the
// closed forms in the family parameter hold, and the relevant genus bound is
// attained with equality. Identities are checked even where a bound's
// hypothesis fails (ex52 k = 1 has slope 3 < 4); such lines carry a note.
VerifyReport verify_example(const ExampleSurface& ex);

}  // namespace hefib
