#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hefib/bounds.hpp"
#include "hefib/invariants.hpp"

using namespace hefib;

namespace {

SingularityIndices make(int g, std::initializer_list<std::pair<int, Int>> vals) {
  SingularityIndices si;
  si.g = g;
  for (const auto& [j, v] : vals) si.set(j, v);
  return si;
}

}  // namespace

TEST_CASE("slope window") {
  CHECK(slope_lower(2) == 2);
  CHECK(slope_lower(7) == Rat(24, 7));
  CHECK(slope_upper(2, 1) == 7);
  CHECK(slope_upper(6, 1) == 9);  // hyperelliptic value 95/9 capped
  CHECK(slope_upper(2, 2) == 7);
  CHECK(slope_upper(3, 2) == Rat(17, 2));
  CHECK(slope_upper(6, 2) == Rat(95, 9));
  CHECK_THROWS_AS(slope_lower(1), ValidationError);
}

TEST_CASE("chi-only genus bounds by base genus") {
  auto gb = genus_bound(1, 1, std::nullopt);
  CHECK(gb.value == Rat(71, 4));
  CHECK(gb.floor_value == 17);
  CHECK(gb.source == BoundSource::QuadraticBaseElliptic);
  CHECK(gb.in_domain);

  auto g0 = genus_bound(3, 0, std::nullopt);
  CHECK(g0.value == 7);
  CHECK(g0.source == BoundSource::GenusZeroBaseLinear);

  auto g2 = genus_bound(1, 2, std::nullopt);
  CHECK(g2.value == 32);
  CHECK(g2.source == BoundSource::QuadraticBaseHigher);

  CHECK_THROWS_AS(genus_bound(0, 1, std::nullopt), ValidationError);
}

TEST_CASE("low slope switches to the linear bound") {
  auto gb = genus_bound(6, 1, Rat(24));
  CHECK(gb.source == BoundSource::LowSlopeLinear);
  CHECK(gb.value == 14);
  CHECK(gb.floor_value == 14);

  auto gb2 = genus_bound(6, 1, Rat(23));
  CHECK(gb2.value == Rat(28, 3));
  CHECK(gb2.floor_value == 9);

  // above slope 4 the ksq hint falls back to the chi-only bound
  auto gb3 = genus_bound(1, 1, Rat(5));
  CHECK(gb3.source == BoundSource::QuadraticBaseElliptic);
  CHECK(gb3.value == Rat(71, 4));
}

TEST_CASE("quadratic bound values") {
  CHECK(genus_bound_quadratic(9, 1, 1) == Rat(71, 4));
  CHECK(genus_bound_quadratic(9, 1, 2) == Rat(107, 8));
  CHECK(genus_bound_quadratic(9, 1, 3) == Rat(151, 12));
  // the certifying families attain it exactly
  CHECK(genus_bound_quadratic(4, 4, 2) == 7);
  CHECK(genus_bound_quadratic(Rat(32, 7), 7, 2) == 17);
  CHECK(genus_bound_quadratic(3, 2, 1) == 4);  // computable below slope 4
  CHECK_THROWS_AS(genus_bound_quadratic(9, 1, 0), ValidationError);
}

TEST_CASE("parity-refined bounds") {
  CHECK(parity_refined_bound(9, 4, Parity::Even) == 140);
  CHECK(parity_refined_bound(9, 4, Parity::Odd) == 82);
  // they are the n = 1 and n = 2 slices of the quadratic bound
  for (int l = 5; l <= 12; ++l) {
    for (int c = 1; c <= 6; ++c) {
      CHECK(parity_refined_bound(l, c, Parity::Even) ==
            genus_bound_quadratic(l, c, 1));
      CHECK(parity_refined_bound(l, c, Parity::Odd) ==
            genus_bound_quadratic(l, c, 2));
    }
  }
}

TEST_CASE("extremes over an n range") {
  auto ex = quadratic_bound_extremes(9, 1, 1, 3);
  CHECK(ex.max_value == Rat(71, 4));
  CHECK(ex.argmax_n == 1);
  CHECK(ex.min_value == Rat(151, 12));
  CHECK(ex.argmin_n == 3);
}

TEST_CASE("n upper bound") {
  CHECK(n_upper(9, 1, 18) == Rat(103, 34));
  CHECK(n_upper(5, 2, 3) == 6);
  CHECK_THROWS_AS(n_upper(4, 1, 18), ValidationError);
  CHECK_THROWS_AS(n_upper(9, 1, 1), ValidationError);
}

TEST_CASE("chi lower bound from the indices") {
  CHECK(chi_lower_coefficient(7, 9, 1) == Rat(16, 13));
  auto si = make(7, {{2, 100}, {9, 1}});
  CHECK(chi_lower_from_indices(si, 1) == Rat(16, 13));  // s_2 does not enter
  si.set(2, -50);
  CHECK(chi_lower_from_indices(si, 1) == Rat(16, 13));
  CHECK_THROWS_AS(chi_lower_coefficient(7, 9, 0), ValidationError);
}

TEST_CASE("chi lower bound is the slope excess, any s_2") {
  std::mt19937_64 rng(0xb0bb0bULL);
  std::uniform_int_distribution<int> g_pick(2, 30);
  std::uniform_int_distribution<int> s2_pick(-15, 40);
  std::uniform_int_distribution<int> sj_pick(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    SingularityIndices si;
    si.g = g_pick(rng);
    si.set(2, s2_pick(rng));
    std::uniform_int_distribution<int> j_pick(3, si.g + 2);
    for (int t = 0; t < 4; ++t) {
      int j = j_pick(rng);
      if (si.g % 2 == 0 && j == si.g + 2) continue;
      si.set(j, sj_pick(rng));
    }
    REQUIRE(!si.validate());
    const Rat excess = ksq_from_indices(si) -
                       Rat(4 * (si.g - 1), si.g) * chi_from_indices(si);
    CHECK(Rat(5 * si.g + 4) * chi_lower_from_indices(si, 1) == si.g * excess);
    CHECK(Rat(8 * si.g + 4) * chi_lower_from_indices(si, 2) == si.g * excess);
  }
}

TEST_CASE("indices forced to vanish at small chi") {
  CHECK(forced_zero_indices(11, 1, 1) == std::vector<int>{5, 7, 9, 11, 13});
  CHECK(forced_zero_indices(13, 1, 1) ==
        std::vector<int>{5, 7, 9, 11, 12, 13, 14, 15});
  CHECK(forced_zero_indices(2, 100, 1).empty());
}

TEST_CASE("isolated negative curve caps ksq") {
  CHECK(minus_curve_ksq_cap(2, 1) == Rat(63, 8));
  CHECK(rat_floor(minus_curve_ksq_cap(2, 1)) == 7);
  CHECK(minus_curve_ksq_cap(1, 1) == 8);
  CHECK(minus_curve_ksq_cap(3, 1) == Rat(23, 3));
  CHECK_THROWS_AS(minus_curve_ksq_cap(0, 1), ValidationError);
}

TEST_CASE("genus cap when s_2 is negative") {
  auto cap = s2_negative_genus_cap(7, 1);
  REQUIRE(cap.has_value());
  CHECK(*cap == Rat(16, 3));
  CHECK(!s2_negative_genus_cap(9, 1).has_value());

  // scan check against the defining inequality at ksq = 4, chi = 1
  auto c4 = s2_negative_genus_cap(4, 1);
  REQUIRE(c4.has_value());
  CHECK(*c4 == Rat(22, 9));
  for (int g = 2; g <= 100; ++g) {
    const bool holds =
        Rat(g - 2, 2 * (g - 1)) <= Rat(4) - Rat(8 * g - 14, g - 1) * 1;
    CHECK(holds == (Rat(g) <= *c4));
  }
}

TEST_CASE("linear slope bound") {
  CHECK(slope_linear_bound(1, 2) == 2);
  CHECK(slope_linear_bound(6, 23) == 24);
  CHECK_THROWS_AS(slope_linear_bound(1, 4), ValidationError);
  CHECK_THROWS_AS(slope_linear_bound(1, 0), ValidationError);
}

TEST_CASE("hodge bound needs a base of genus at least 2") {
  CHECK(hodge_bound(2, 3).value == 2);
  CHECK(hodge_bound(1, 2).value == 2);
  CHECK_THROWS_AS(hodge_bound(1, 1), ValidationError);
}

TEST_CASE("bound list for flag combinations") {
  auto only_chi = applicable_bounds(1, 1, std::nullopt, std::nullopt,
                                    std::nullopt);
  REQUIRE(only_chi.size() == 1);
  CHECK(only_chi[0].source == BoundSource::QuadraticBaseElliptic);
  CHECK(only_chi[0].floor_value == 17);

  auto with_slope =
      applicable_bounds(1, 1, Rat(9), std::nullopt, std::nullopt);
  REQUIRE(with_slope.size() == 3);
  CHECK(with_slope[0].source == BoundSource::QuadraticParityOdd);
  CHECK(with_slope[0].value == Rat(107, 8));
  CHECK(with_slope[1].value == Rat(71, 4));
  CHECK(with_slope[2].value == Rat(71, 4));

  auto low = applicable_bounds(6, 1, Rat(23), std::nullopt, std::nullopt);
  REQUIRE(low.size() == 2);
  CHECK(low[0].source == BoundSource::LowSlopeLinear);
  CHECK(low[0].value == Rat(28, 3));
  CHECK(low[1].source == BoundSource::SlopeLinear);
  CHECK(low[1].value == 24);

  auto higher = applicable_bounds(1, 2, std::nullopt, std::nullopt,
                                  std::nullopt);
  REQUIRE(higher.size() == 2);
  CHECK(higher[0].source == BoundSource::HodgePositivity);
  CHECK(higher[1].source == BoundSource::QuadraticBaseHigher);

  CHECK_THROWS_AS(
      applicable_bounds(1, 1, Rat(9), Rat(8), std::nullopt),
      ValidationError);
  CHECK_THROWS_AS(
      applicable_bounds(1, 1, std::nullopt, std::nullopt, Int(2)),
      ValidationError);
}

TEST_CASE("quadratic bound is convex in n") {
  const Rat lambdas[] = {Rat(9, 2), Rat(5), Rat(6), Rat(8), Rat(9)};
  const Rat chis[] = {Rat(1), Rat(4), Rat(10)};
  for (const Rat& l : lambdas) {
    for (const Rat& c : chis) {
      for (Int n = 2; n <= 12; ++n) {
        const Rat mid = genus_bound_quadratic(l, c, n);
        const Rat left = genus_bound_quadratic(l, c, n - 1);
        const Rat right = genus_bound_quadratic(l, c, n + 1);
        CHECK(left + right >= 2 * mid);
      }
    }
  }
}

TEST_CASE("first two n slices dominate the admissible range") {
  const Rat lambdas[] = {Rat(6), Rat(8), Rat(9)};
  const Rat chis[] = {Rat(4), Rat(10)};
  for (const Rat& l : lambdas) {
    for (const Rat& c : chis) {
      const Rat g1 = genus_bound_quadratic(l, c, 1);
      if (g1 < 25) continue;
      const Rat g2 = genus_bound_quadratic(l, c, 2);
      CHECK(g1 >= g2);
      const Int n_max = rat_floor(n_upper(l, c, int(rat_floor(g1))));
      for (Int n = 3; n <= n_max; ++n) {
        CHECK(g2 >= genus_bound_quadratic(l, c, n));
      }
    }
  }
}
