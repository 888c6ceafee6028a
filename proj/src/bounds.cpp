#include "hefib/bounds.hpp"

#include <algorithm>

#include "hefib/invariants.hpp"

namespace hefib {

namespace {

GenusBound make_bound(Rat value, BoundSource src, bool in_domain,
                      std::map<std::string, Rat> params) {
  GenusBound b;
  b.value = std::move(value);
  b.floor_value = rat_floor(b.value);
  b.source = src;
  b.in_domain = in_domain;
  b.params = std::move(params);
  return b;
}

void require_chi_positive(const Rat& chi) {
  if (chi <= 0) throw ValidationError("chi must be > 0, got " + rat_to_string(chi));
}

}  // namespace

std::string to_string(BoundSource s) {
  switch (s) {
    case BoundSource::SlopeLinear: return "slope-linear";
    case BoundSource::LowSlopeLinear: return "low-slope-linear";
    case BoundSource::GenusZeroBaseLinear: return "genus-zero-base-linear";
    case BoundSource::QuadraticSharp: return "quadratic-sharp";
    case BoundSource::QuadraticParityEven: return "quadratic-parity-even";
    case BoundSource::QuadraticParityOdd: return "quadratic-parity-odd";
    case BoundSource::QuadraticBaseElliptic: return "quadratic-base-elliptic";
    case BoundSource::QuadraticBaseHigher: return "quadratic-base-higher";
    case BoundSource::HodgePositivity: return "hodge-positivity";
  }
  return "unknown";
}

Rat slope_lower(int g) {
  if (g < 2) throw ValidationError("slope_lower: g must be >= 2");
  return Rat(4 * (g - 1), g);
}

Rat slope_upper(int g, int b) {
  if (g < 2) throw ValidationError("slope_upper: g must be >= 2");
  if (b < 0) throw ValidationError("slope_upper: b must be >= 0");
  Rat hyper = (g % 2 == 0) ? Rat(12) - Rat(8 * g + 4, Int(g) * g)
                           : Rat(12) - Rat(8 * g + 4, Int(g) * g - 1);
  if (b == 1) return std::min(Rat(9), hyper);
  return hyper;
}

Rat genus_bound_quadratic(const Rat& lambda, const Rat& chi, const Int& n) {
  if (n < 1) throw ValidationError("genus_bound_quadratic: n must be >= 1");
  Rat t = lambda - 4;
  return t * t / (4 * Rat(n)) * chi * chi + (t + lambda / (2 * Rat(n))) * chi +
         Rat(n) + 1;
}

Rat n_upper(const Rat& lambda, const Rat& chi, int g) {
  if (g < 2) throw ValidationError("n_upper: g must be >= 2");
  if (lambda <= 4) throw ValidationError("n_upper: lambda must be > 4");
  require_chi_positive(chi);
  return ((lambda - 4) / 2 + lambda / (g - 1)) * chi;
}

GenusBound genus_bound(const Rat& chi, int b, std::optional<Rat> ksq) {
  require_chi_positive(chi);
  if (b < 0) throw ValidationError("base genus must be >= 0");
  if (ksq && *ksq <= 4 * chi) {
    Rat den = 2 + 4 * chi - *ksq;
    // den >= 2 here; a nonpositive denominator cannot occur on this branch.
    return make_bound((4 * chi + 4) / den, BoundSource::LowSlopeLinear, true,
                      {{"chi", chi}, {"ksq", *ksq}});
  }
  if (b == 0) {
    return make_bound(2 * chi + 1, BoundSource::GenusZeroBaseLinear, true,
                      {{"chi", chi}});
  }
  if (b == 1) {
    return make_bound(Rat(25, 4) * chi * chi + Rat(19, 2) * chi + 2,
                      BoundSource::QuadraticBaseElliptic, true, {{"chi", chi}});
  }
  return make_bound(16 * chi * chi + 14 * chi + 2,
                    BoundSource::QuadraticBaseHigher, true,
                    {{"chi", chi}, {"b", Rat(b)}});
}

GenusBound hodge_bound(const Rat& chi, int b) {
  require_chi_positive(chi);
  if (b < 2) throw ValidationError("hodge_bound: requires b >= 2");
  return make_bound(chi / (b - 1) + 1, BoundSource::HodgePositivity, true,
                    {{"chi", chi}, {"b", Rat(b)}});
}

Rat parity_refined_bound(const Rat& lambda, const Rat& chi, Parity parity) {
  require_chi_positive(chi);
  Rat t = lambda - 4;
  if (parity == Parity::Even) {
    return t * t / 4 * chi * chi + (Rat(3, 2) * lambda - 4) * chi + 2;
  }
  return t * t / 8 * chi * chi + (Rat(5, 4) * lambda - 4) * chi + 3;
}

QuadraticExtremes quadratic_bound_extremes(const Rat& lambda, const Rat& chi,
                                           const Int& n_lo, const Int& n_hi) {
  if (n_lo < 1 || n_hi < n_lo) {
    throw ValidationError("quadratic_bound_extremes: need 1 <= n_lo <= n_hi");
  }
  QuadraticExtremes out;
  out.min_value = out.max_value = genus_bound_quadratic(lambda, chi, n_lo);
  out.argmin_n = out.argmax_n = n_lo;
  for (Int n = n_lo + 1; n <= n_hi; ++n) {
    Rat v = genus_bound_quadratic(lambda, chi, n);
    if (v < out.min_value) {
      out.min_value = v;
      out.argmin_n = n;
    }
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax_n = n;
    }
  }
  return out;
}

Rat chi_lower_coefficient(int g, int j, int b) {
  if (b < 1) throw ValidationError("chi_lower_coefficient: requires b >= 1");
  Int den = (b == 1) ? Int(5 * g + 4) : Int(8 * g + 4);
  return Rat(slope_excess_numer_coeff(g, j), den);
}

Rat chi_lower_from_indices(const SingularityIndices& si, int b) {
  si.require_valid();
  if (b < 1) throw ValidationError("chi_lower_from_indices: requires b >= 1");
  Rat acc = 0;
  for (const auto& [j, v] : si.s) {
    if (j >= 3 && v != 0) acc += chi_lower_coefficient(si.g, j, b) * Rat(v);
  }
  return acc;
}

std::vector<int> forced_zero_indices(int g, const Rat& chi, int b) {
  if (g < 2) throw ValidationError("forced_zero_indices: g must be >= 2");
  require_chi_positive(chi);
  std::vector<int> out;
  for (int j = 3; j <= g + 2; ++j) {
    Rat c = chi_lower_coefficient(g, j, b);
    bool forced = (b == 1) ? (c > chi) : (c >= chi);
    if (forced) out.push_back(j);
  }
  return out;
}

Rat minus_curve_ksq_cap(const Int& m, const Rat& chi) {
  if (m < 1) throw ValidationError("minus_curve_ksq_cap: m must be >= 1");
  return 9 * chi - Rat((m + 1) * (m + 1), 4 * m);
}

std::optional<Rat> s2_negative_genus_cap(const Rat& ksq, const Rat& chi) {
  require_chi_positive(chi);
  if (ksq <= 0) throw ValidationError("s2_negative_genus_cap: ksq must be > 0");
  Rat a = 1 - 2 * ksq + 16 * chi;
  Rat b = 2 - 2 * ksq + 28 * chi;
  if (a <= 0) return std::nullopt;
  return b / a;
}

Rat slope_linear_bound(const Rat& chi, const Rat& ksq) {
  require_chi_positive(chi);
  if (ksq <= 0 || ksq >= 4 * chi) {
    throw ValidationError("slope_linear_bound: requires 0 < ksq < 4chi");
  }
  return 4 * chi / (4 * chi - ksq);
}

std::vector<GenusBound> applicable_bounds(const Rat& chi, int b,
                                          std::optional<Rat> ksq,
                                          std::optional<Rat> lambda,
                                          std::optional<Int> n) {
  require_chi_positive(chi);
  if (b < 0) throw ValidationError("base genus must be >= 0");
  if (lambda) {
    if (ksq && *ksq != *lambda * chi) {
      throw ValidationError("inconsistent flags: lambda != ksq/chi");
    }
    if (!ksq) ksq = *lambda * chi;
  }
  if (n && !ksq) {
    throw ValidationError("flag n requires a slope (lambda or ksq)");
  }

  std::vector<GenusBound> out;
  if (ksq) {
    if (*ksq <= 4 * chi) {
      out.push_back(genus_bound(chi, b, ksq));
      if (*ksq > 0 && *ksq < 4 * chi) {
        out.push_back(make_bound(slope_linear_bound(chi, *ksq),
                                 BoundSource::SlopeLinear, true,
                                 {{"chi", chi}, {"ksq", *ksq}}));
      }
    } else {
      Rat l = *ksq / chi;
      bool dom = l > 4;
      if (n) {
        out.push_back(make_bound(
            genus_bound_quadratic(l, chi, *n), BoundSource::QuadraticSharp,
            dom && *n >= 1,
            {{"lambda", l}, {"chi", chi}, {"n", Rat(*n)}}));
      } else {
        out.push_back(make_bound(genus_bound_quadratic(l, chi, 1),
                                 BoundSource::QuadraticSharp, dom,
                                 {{"lambda", l}, {"chi", chi}, {"n", Rat(1)}}));
        out.push_back(make_bound(parity_refined_bound(l, chi, Parity::Even),
                                 BoundSource::QuadraticParityEven, dom,
                                 {{"lambda", l}, {"chi", chi}}));
        out.push_back(make_bound(parity_refined_bound(l, chi, Parity::Odd),
                                 BoundSource::QuadraticParityOdd, dom,
                                 {{"lambda", l}, {"chi", chi}}));
      }
    }
  } else {
    if (b >= 2) out.push_back(hodge_bound(chi, b));
    out.push_back(genus_bound(chi, b, std::nullopt));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const GenusBound& x, const GenusBound& y) {
                     return x.value < y.value;
                   });
  return out;
}

}  // namespace hefib
