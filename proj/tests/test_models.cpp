#include <doctest.h>

#include <cmath>
#include <random>

#include "bk/models.hpp"

using namespace bk;

TEST_SUITE("models") {

TEST_CASE("Bures distance on scalars and the ray") {
  CHECK(bures_scalar(1, 4) == doctest::Approx(1));
  CHECK(bures_scalar(0, 9) == doctest::Approx(3));
  CHECK(bures_ray(4, 4) == 0);
  CHECK(bures_ray(0.25, 1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(bures_scalar(-1, 1), std::invalid_argument);
}

TEST_CASE("ray metric is the square-root line") {
  const FiniteMetric m = ray_metric({0, 1, 4}, {"x0", "x1", "x4"});
  CHECK(m(0, 1) == doctest::Approx(1));
  CHECK(m(1, 2) == doctest::Approx(1));
  CHECK(m(0, 2) == doctest::Approx(2));
  CHECK(m.label(2) == "x4");
  CHECK_THROWS_AS(ray_metric({1, 1}), MetricError);
}

TEST_CASE("Hellinger distance against a direct sum") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 4);
  for (int i = 0; i < 500; ++i) {
    HellingerPoint a{{u(rng), u(rng), u(rng)}}, b{{u(rng), u(rng), u(rng)}};
    double s = 0;
    for (int k = 0; k < 3; ++k) {
      const double d = std::sqrt(a.coords[k]) - std::sqrt(b.coords[k]);
      s += d * d;
    }
    CHECK(hellinger(a, b) == doctest::Approx(std::sqrt(s)).epsilon(1e-13));
  }
  CHECK(hellinger({{1, 0}}, {{0, 1}}) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(hellinger({{1, 0}}, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(HellingerPoint{{-1.0}}.validate(), std::invalid_argument);
}

TEST_CASE("scalar CP test is exact") {
  CHECK(ScalarCB({2, 0}).is_cp());
  CHECK(ScalarCB({0, 0}).is_cp());
  CHECK_FALSE(ScalarCB({2, 1e-300}).is_cp());
  CHECK_FALSE(ScalarCB({-1e-300, 0}).is_cp());
  CHECK(ScalarCB({3, 4}).cb_norm() == doctest::Approx(5));
}

TEST_CASE("KSW bounds hold on scalar maps") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 10);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(rng), b = u(rng);
    CHECK(ksw_check(bures_scalar(a, b), std::abs(a - b), a, b));
  }
  // Sharp on scalars: beta equals the lower bound.
  const KswResult r = ksw_bounds(bures_scalar(1, 4), 3, 1, 4);
  CHECK(r.lower == doctest::Approx(1));
  CHECK(r.upper == doctest::Approx(std::sqrt(3.0)));
  CHECK(r.holds);
  CHECK_FALSE(ksw_check(2.0, 1.0, 1.0, 1.0));
  CHECK_FALSE(ksw_check(0.1, 3.0, 1.0, 4.0));
  const KswResult zero = ksw_bounds(0, 0, 0, 0);
  CHECK_FALSE(zero.lower_checked);
  CHECK(zero.holds);
}

TEST_CASE("synthetic Y space radius bound") {
  const BKParams params{2.0, 0.5, LpExponent::inf()};
  CHECK(max_synthetic_radius(16, params) == doctest::Approx(4));
  const PointedFiniteMetric y(FiniteMetric({{0, 1, 3.5}, {1, 0, 3}, {3.5, 3, 0}}), 0);
  CHECK(SyntheticYSpace::check(y, {0, 1, 16}, params).empty());
  const auto bad = SyntheticYSpace::check(y, {0, 1, 4}, params);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].point == 2);
  CHECK(bad[0].bound == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK_THROWS_AS(SyntheticYSpace(y, {0, 1, 4}, params), std::invalid_argument);
  CHECK_NOTHROW(SyntheticYSpace(y, {0, 1, 16}, params));
}

TEST_CASE("scalar counterexample sequences") {
  ScalarScenarioConfig cfg;
  cfg.n_max = 40;
  cfg.params = {1.0, 1.0, LpExponent::inf()};
  const ScalarScenarioReport rep = scalar_counterexample_scenario(cfg);
  REQUIRE(rep.rows.size() == 40);
  CHECK(rep.consistent());
  CHECK(rep.beta_anchors == doctest::Approx(1));
  CHECK(rep.beta_phi_anchor == doctest::Approx(1));
  const auto& last = rep.rows.back();
  CHECK(last.psi_radius == doctest::Approx(std::sqrt(1.0 / 40)));
  CHECK(last.cb_dist_phi == doctest::Approx(1.0 / 40));
  CHECK(last.d_alt_anchor >= rep.beta_anchors - 1e-12);
  CHECK(last.d_phi_perturbed >= rep.beta_phi_anchor - 1e-12);
  // The anchored distance to psi_n shrinks while the alt-anchored one does not.
  CHECK(last.d_anchor_psi < rep.rows.front().d_anchor_psi);
  CHECK(last.anchor_gap > rep.rows.front().anchor_gap);
  CHECK(last.anchor_gap <= rep.beta_anchors + 1e-12);
}

}  // TEST_SUITE
