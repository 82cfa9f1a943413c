#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

#include "bk/witness.hpp"

using namespace bk;

namespace {

// max_i (||z - p_i|| - r_i)
double margin_at(const BallIntersectionQuery& q, double x, double y) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.centers.size(); ++i)
    m = std::max(m, std::hypot(x - q.centers[i][0], y - q.centers[i][1]) - q.radii[i]);
  return m;
}

// Exhaustive grid over [0, 3]^2.
double grid_min_margin(const BallIntersectionQuery& q, double h) {
  double best = std::numeric_limits<double>::infinity();
  for (double x = 0; x <= 3 + 1e-12; x += h)
    for (double y = 0; y <= 3 + 1e-12; y += h) best = std::min(best, margin_at(q, x, y));
  return best;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("query validation") {
  CHECK_THROWS_AS(BallIntersectionQuery{}.validate(), std::invalid_argument);
  CHECK_THROWS_AS((BallIntersectionQuery{{{0.0}, {0.0, 1.0}}, {1, 1}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BallIntersectionQuery{{{0.0}}, {-1}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BallIntersectionQuery{{{0.0}}, {1, 2}}.validate()), std::invalid_argument);
}

TEST_CASE("ray intersection matches interval logic") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 3), r(0, 1.5);
  for (int i = 0; i < 3000; ++i) {
    BallIntersectionQuery q;
    const int k = 1 + i % 4;
    double lo = 0, hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      q.centers.push_back({u(rng)});
      q.radii.push_back(r(rng));
      lo = std::max(lo, q.centers.back()[0] - q.radii.back());
      hi = std::min(hi, q.centers.back()[0] + q.radii.back());
    }
    const WitnessResult res = ray_ball_intersection(q);
    CHECK(res.feasible() == (lo <= hi + 1e-12));
    REQUIRE(res.witness.size() == 1);
    CHECK(res.witness[0] >= 0);
    // The witness attains the reported margin.
    double m = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) m = std::max(m, std::abs(res.witness[0] - q.centers[j][0]) - q.radii[j]);
    CHECK(m == doctest::Approx(res.margin).epsilon(1e-12));
  }
}

TEST_CASE("ray intersection: tangent balls are feasible") {
  const WitnessResult res = ray_ball_intersection({{{0.0}, {2.0}}, {1, 1}});
  CHECK(res.feasible());
  CHECK(res.witness[0] == doctest::Approx(1));
}

TEST_CASE("orthant solver against a grid search in the plane") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 2), r(0.05, 1.2);
  const double h = 0.005;
  for (int i = 0; i < 60; ++i) {
    BallIntersectionQuery q;
    for (int j = 0; j < 2 + i % 3; ++j) {
      q.centers.push_back({u(rng), u(rng)});
      q.radii.push_back(r(rng));
    }
    const WitnessResult res = orthant_ball_intersection(q);
    REQUIRE(res.status != WitnessStatus::NonConverged);
    const double grid = grid_min_margin(q, h);
    // The grid overestimates the true minimum by at most h / sqrt(2).
    CHECK(res.margin <= grid + 1e-9);
    CHECK(res.margin >= grid - h);
    REQUIRE(res.witness.size() == 2);
    CHECK(res.witness[0] >= 0);
    CHECK(res.witness[1] >= 0);
    CHECK(margin_at(q, res.witness[0], res.witness[1]) == doctest::Approx(res.margin).epsilon(1e-9));
  }
}

TEST_CASE("orthant solver respects the boundary of the orthant") {
  const BallIntersectionQuery q{{{0.0, 0.2}, {0.0, 1.8}}, {0.85, 0.85}};
  const WitnessResult inside = orthant_ball_intersection(q);
  CHECK(inside.feasible());
  CHECK(inside.witness[0] >= 0);
  CHECK_THROWS_AS(orthant_ball_intersection({{{0.0, -1.0}}, {1.0}}), std::invalid_argument);
  const BallIntersectionQuery far{{{0.0, 2.0}, {2.0, 0.0}}, {0.5, 0.5}};
  const WitnessResult res = orthant_ball_intersection(far);
  CHECK(res.status == WitnessStatus::Infeasible);
  CHECK(res.margin == doctest::Approx(std::sqrt(2.0) - 0.5).epsilon(1e-8));
}

TEST_CASE("orthant: tangent balls are Boundary") {
  const WitnessResult res = orthant_ball_intersection({{{0.0, 0.0}, {2.0, 0.0}}, {1, 1}});
  CHECK(res.status == WitnessStatus::Boundary);
  CHECK(res.feasible());
}

TEST_CASE("solver tolerance from the environment") {
  ::setenv("BK_SOLVER_TOL", "1e-6", 1);
  CHECK(default_solver_tolerance() == 1e-6);
  ::setenv("BK_SOLVER_TOL", "garbage", 1);
  CHECK(default_solver_tolerance() == 1e-9);
  ::unsetenv("BK_SOLVER_TOL");
  CHECK(default_solver_tolerance() == 1e-9);
}

TEST_CASE("finite witness intersection") {
  const FiniteMetric m({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  const auto d = [&](std::size_t a, std::size_t b) { return m(a, b); };
  const std::vector<std::size_t> centers = {0, 2};
  const std::vector<std::size_t> all = {0, 1, 2}, ends = {0, 2};
  const std::vector<double> radii = {1, 1};
  const WitnessResult mid = finite_witness_intersection(centers, radii, all, d);
  CHECK(mid.feasible());
  CHECK(mid.witness_index == 1u);
  CHECK_FALSE(finite_witness_intersection(centers, radii, ends, d).feasible());
}

TEST_CASE("oracles agree on a shared line") {
  // Points on the ray at c = 0, 1, 4 and the same points as 1-d Hellinger vectors.
  const RayOracle ray({0, 1, 4});
  const OrthantOracle orth({{{0}}, {{1}}, {{4}}});
  const FiniteSetOracle fin(FiniteMetric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(ray.distance(i, j) == doctest::Approx(fin.distance(i, j)));
      CHECK(orth.distance(i, j) == doctest::Approx(fin.distance(i, j)));
    }
  const std::vector<std::size_t> ends = {0, 2};
  for (double t : {0.4, 0.99, 1.0, 1.01, 1.5}) {
    const std::vector<double> radii = {t, t};
    const bool want = t >= 1.0 - 1e-12;
    CHECK(ray.intersect(ends, radii).feasible() == want);
    CHECK(orth.intersect(ends, radii).feasible() == want);
    CHECK(fin.intersect(ends, radii).feasible() == want);
  }
  CHECK(to_string(WitnessOracle::Kind::Orthant) != to_string(WitnessOracle::Kind::Ray));
}

}  // TEST_SUITE
