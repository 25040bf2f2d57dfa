#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "nisq/bounds.hpp"

using namespace nisq;

TEST_CASE("decay bound basics") {
  CHECK(decay_bound(5, 0.3, 0) == doctest::Approx(5.0));
  CHECK(decay_bound(5, 1.0, 1) == doctest::Approx(0.0));
  CHECK(decay_bound(2, 0.2, 1) == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("decay bound is multiplicative across depth splits") {
  for (int t1 = 0; t1 <= 5; ++t1)
    for (int t2 = 0; t2 <= 5; ++t2)
      CHECK(decay_bound(7, 0.13, t1 + t2) ==
            doctest::Approx(decay_bound(7, 0.13, t1) * std::pow(0.87, t2)).epsilon(1e-12));
}

TEST_CASE("t* scan matches hand-checked cases") {
  CHECK(t_star_1d(16, 0.5) == 2);  // 16*0.25 = 4 >= 2 holds, 16*0.125 = 2 >= 3 fails
  CHECK(t_star_1d(1, 0.5) == 0);
  // property: the returned depth satisfies the inequality and its successor fails
  for (int n : {2, 5, 16, 100})
    for (double p : {0.05, 0.3, 0.7}) {
      const int t = t_star_1d(n, p);
      CHECK(n * std::pow(1 - p, t) >= t);
      CHECK(n * std::pow(1 - p, t + 1) < t + 1);
    }
}

TEST_CASE("1d bound branches") {
  CHECK(ent_bound_1d(16, 0.5) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(ent_bound_1d(2, 0.6) == doctest::Approx(1.0));  // n <= 1/(1-p) = 2.5
  CHECK(ent_bound_1d(100, 0.01) == doctest::Approx(458.2105765533885).epsilon(1e-12));
}

TEST_CASE("t* never exceeds the closed-form bound on the log branch") {
  for (int n : {3, 8, 16, 64, 100})
    for (double p : {0.05, 0.2, 0.5, 0.9})
      if (n > 1.0 / (1.0 - p)) CHECK(t_star_1d(n, p) <= ent_bound_1d(n, p));
}

TEST_CASE("2d bound formula and certification threshold") {
  const EntBound2d a = ent_bound_2d(16, 0.5);
  CHECK(a.value == doctest::Approx(9.0).epsilon(1e-12));  // B=1: 1*2*4 + 1
  CHECK_FALSE(a.certified);                               // 16 <= (3/0.5)^2 = 36

  const EntBound2d b = ent_bound_2d(64, 0.5);
  CHECK(b.value == doctest::Approx(36.0).epsilon(1e-12));  // B=2: 2*2*8 + 4
  CHECK(b.certified);

  const EntBound2d c = ent_bound_2d(36, 0.9);
  CHECK_FALSE(c.certified);  // 36 <= (3/0.1)^2 = 900

  CHECK_THROWS_AS(ent_bound_2d(15, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ent_bound_2d(2, 0.5), std::invalid_argument);
}

TEST_CASE("curve rows take the min against n/2") {
  const auto points = fig_curve({2, 3, 4, 16, 32}, 0.5, CurveTopology::chain);
  REQUIRE(points.size() == 5);
  CHECK(points[0].curve_value == doctest::Approx(1.0));   // min(1, 1)
  CHECK(points[1].curve_value == doctest::Approx(1.5));   // n/2 branch
  CHECK(points[3].curve_value == doctest::Approx(4.0));   // bound branch: log2(16)
  CHECK(points[3].bound == doctest::Approx(4.0));
  for (const auto& pt : points) {
    CHECK(pt.curve_value >= 0.0);
    CHECK(pt.curve_value <= pt.n / 2.0);
  }
  for (size_t i = 1; i < points.size(); ++i)
    CHECK(points[i].curve_value >= points[i - 1].curve_value - 1e-12);
}

TEST_CASE("curve stays nonnegative as p approaches one") {
  for (const auto& pt : fig_curve({4, 8, 16, 64}, 0.999, CurveTopology::chain)) {
    CHECK(pt.curve_value >= 0.0);
    CHECK(pt.curve_value <= pt.n / 2.0);
  }
}

TEST_CASE("grid curve keeps only perfect squares") {
  const auto points = fig_curve({4, 5, 9, 16}, 0.5, CurveTopology::grid);
  REQUIRE(points.size() == 3);
  CHECK(points[0].n == 4);
  CHECK(points[1].n == 9);
  CHECK(points[2].n == 16);
  CHECK(points[2].bound == doctest::Approx(9.0));
  CHECK(points[2].curve_value == doctest::Approx(8.0));  // min(16/2, 9)
}

TEST_CASE("curve csv is stable and carries 12 significant digits") {
  const auto points = fig_curve({2, 16}, 0.5, CurveTopology::chain);
  const std::string csv = curve_csv(points);
  CHECK(csv == curve_csv(points));
  CHECK(csv.rfind("n,p,topology,bound,curve_value\n", 0) == 0);
  CHECK(csv.find("16,0.5,chain,4,4\n") != std::string::npos);
}

TEST_CASE("threshold formulas match direct evaluation") {
  CHECK(advantage_depth_threshold(1, 0.5, ThresholdVariant::thmC2) == doctest::Approx(2.5));
  CHECK(advantage_depth_threshold(1, 0.5, ThresholdVariant::thmC1) == doctest::Approx(5.0));
  // monotone: higher noise needs less depth
  CHECK(advantage_depth_threshold(1000, 0.5, ThresholdVariant::thmC1) <
        advantage_depth_threshold(1000, 0.1, ThresholdVariant::thmC1));
}

TEST_CASE("threshold audit over the (T, p) grid") {
  for (double T : {10.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
    for (double p : {0.01, 0.1, 0.5}) {
      const int t1 = static_cast<int>(std::ceil(advantage_depth_threshold(T, p, ThresholdVariant::thmC1)));
      CHECK(T * std::pow(1 - p, t1) <= 1.0 / 32.0 + 1e-12);
      // the halved constants guarantee the same product at twice the depth
      const int t2 = static_cast<int>(std::ceil(advantage_depth_threshold(T, p, ThresholdVariant::thmC2)));
      CHECK(T * std::pow(1 - p, 2 * t2) <= 1.0 / 32.0 + 1e-12);
      CHECK(t2 <= t1);
    }
  }
}

TEST_CASE("noise estimates reproduce the published device table") {
  const NoiseEstimate zuchongzhi = estimate_p({30.5e-6, 32e-9, "zuchongzhi"});
  CHECK(zuchongzhi.p == doctest::Approx(1.0491803278688525e-3).epsilon(1e-12));
  CHECK(round_to_one_sig_fig(zuchongzhi.p) == doctest::Approx(1e-3));
  CHECK_FALSE(zuchongzhi.unit_warning);

  const NoiseEstimate sycamore = estimate_p({15e-6, 25e-9, "sycamore"});
  CHECK(sycamore.p == doctest::Approx(1.6666666666666666e-3).epsilon(1e-12));
  CHECK(round_to_one_sig_fig(sycamore.p) == doctest::Approx(2e-3));
}

TEST_CASE("gate time equal to coherence time is flagged") {
  const NoiseEstimate e = estimate_p({1e-6, 1e-6, ""});
  CHECK(e.p == doctest::Approx(1.0));
  CHECK_FALSE(e.unit_warning);
  const NoiseEstimate bad = estimate_p({1e-9, 1e-6, ""});
  CHECK(bad.unit_warning);
  CHECK(bad.p == doctest::Approx(1.0));  // clamped
  CHECK(bad.raw_ratio == doctest::Approx(1000.0));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(decay_bound(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(t_star_1d(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ent_bound_1d(1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(advantage_depth_threshold(0.5, 0.5, ThresholdVariant::thmC1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_p({0.0, 1e-9, ""}), std::invalid_argument);
}
