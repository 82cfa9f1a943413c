#include <doctest.h>

#include <cmath>
#include <random>

#include "bk/complexes.hpp"
#include "bk/random_clouds.hpp"
#include "bk/wedge_complex.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

double lp(double a, double b, const LpExponent& p) {
  if (p.is_inf()) return std::max(a, b);
  return std::pow(std::pow(a, p.value()) + std::pow(b, p.value()), 1.0 / p.value());
}

// Every point of the wedge, written from scratch: C points first, then the
// Y points other than *. `vertex_of[v]` maps cloud vertex v into this list.
struct Wedge {
  std::vector<std::pair<bool, std::size_t>> pts;  // (is_y, component index)
  std::vector<int> vertex_of;
  const WedgeCloud* cloud;

  explicit Wedge(const WedgeCloud& w) : cloud(&w) {
    for (std::size_t i = 0; i < w.c_side().size(); ++i) pts.push_back({false, i});
    for (std::size_t i = 0; i < w.y_side().size(); ++i)
      if (i != w.star()) pts.push_back({true, i});
    for (std::size_t i = 0; i < w.c_side().size(); ++i)
      if (i != w.anchor() || w.include_basepoint()) vertex_of.push_back(static_cast<int>(i));
    int k = static_cast<int>(w.c_side().size());
    for (std::size_t i = 0; i < w.y_side().size(); ++i)
      if (i != w.star()) vertex_of.push_back(k++);
  }

  double operator()(int a, int b) const {
    const auto [ya, ia] = pts[static_cast<std::size_t>(a)];
    const auto [yb, ib] = pts[static_cast<std::size_t>(b)];
    const auto& c = cloud->c_side().metric();
    const auto& y = cloud->y_side().metric();
    if (ya == yb) return ya ? y(ia, ib) : c(ia, ib);
    const std::size_t ci = ya ? ib : ia, yi = ya ? ia : ib;
    return lp(c(ci, cloud->anchor()), y(yi, cloud->star()), cloud->params().p);
  }

  double vd(int u, int v) const {
    return (*this)(vertex_of[static_cast<std::size_t>(u)], vertex_of[static_cast<std::size_t>(v)]);
  }

  std::vector<int> all() const {
    std::vector<int> out(pts.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }
};

std::vector<std::size_t> pick(const std::vector<std::size_t>& from, unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (mask & (1u << i)) out.push_back(from[i]);
  return out;
}

class RecordingOracle final : public WitnessOracle {
 public:
  explicit RecordingOracle(std::shared_ptr<const WitnessOracle> inner) : inner_(std::move(inner)) {}
  Kind kind() const override { return inner_->kind(); }
  std::size_t size() const override { return inner_->size(); }
  double distance(std::size_t i, std::size_t j) const override { return inner_->distance(i, j); }
  WitnessResult intersect(std::span<const std::size_t> c, std::span<const double> r) const override {
    centers.assign(c.begin(), c.end());
    radii.assign(r.begin(), r.end());
    return inner_->intersect(c, r);
  }
  mutable std::vector<std::size_t> centers;
  mutable std::vector<double> radii;

 private:
  std::shared_ptr<const WitnessOracle> inner_;
};

class NeverOracle final : public WitnessOracle {
 public:
  explicit NeverOracle(std::size_t n) : n_(n) {}
  Kind kind() const override { return Kind::Orthant; }
  std::size_t size() const override { return n_; }
  double distance(std::size_t i, std::size_t j) const override { return i == j ? 0.0 : 1.0; }
  WitnessResult intersect(std::span<const std::size_t>, std::span<const double>) const override {
    WitnessResult r;
    r.status = WitnessStatus::NonConverged;
    return r;
  }

 private:
  std::size_t n_;
};

// theta, a, b on the C side with radii 0, 1, 0.5 and *, u on the Y side with r_Y(u) = 0.8.
WedgeCloud line_cloud(LpExponent p) {
  const FiniteMetric c({{0, 1, 0.5}, {1, 0, 1.5}, {0.5, 1.5, 0}});
  const FiniteMetric y({{0, 0.8}, {0.8, 0}});
  return WedgeCloud(PointedFiniteMetric(c, 0), PointedFiniteMetric(y, 0), BKParams{1, 1, p}, false);
}

const LpExponent kPs[] = {LpExponent::finite(1), LpExponent::finite(2), LpExponent::finite(3.5), LpExponent::inf()};

}  // namespace

TEST_SUITE("wedge_complex") {

TEST_CASE("radial profile") {
  const RadialProfile r = RadialProfile::of(line_cloud(LpExponent::inf()));
  CHECK(r.r_c == std::vector<double>{0, 1, 0.5});
  CHECK(r.r_y == std::vector<double>{0, 0.8});
}

TEST_CASE("mixed rips criterion over every sigma and tau") {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> ts(0.1, 3.0);
  for (int i = 0; i < 120; ++i) {
    const WedgeCloud w = random_wedge_cloud(rng, {4, 4, kPs[i % 4]});
    const Wedge oracle_w(w);
    std::vector<std::size_t> cs, ys;
    for (std::size_t k = 0; k < w.c_side().size(); ++k) cs.push_back(k);
    for (std::size_t k = 0; k < w.y_side().size(); ++k)
      if (k != w.star()) ys.push_back(k);
    if (ys.empty()) continue;
    const double t = ts(rng);
    for (unsigned ms = 1; ms < (1u << cs.size()); ++ms)
      for (unsigned my = 1; my < (1u << ys.size()); ++my) {
        const auto sigma = pick(cs, ms), tau = pick(ys, my);
        // Brute force: every pairwise wedge distance is at most t.
        std::vector<int> ids;
        for (auto s : sigma) ids.push_back(static_cast<int>(s));
        for (auto u : tau) {
          int pos = static_cast<int>(w.c_side().size());
          for (std::size_t k = 0; k < u; ++k)
            if (k != w.star()) ++pos;
          ids.push_back(pos);
        }
        bool want = true;
        for (int a : ids)
          for (int b : ids) want = want && oracle_w(a, b) <= t + oracle::kTol;
        const auto cert = mixed_rips_criterion(w, sigma, tau, t);
        CHECK(cert.verdict == want);
      }
  }
}

TEST_CASE("mixed criteria reject bad input") {
  const WedgeCloud w = line_cloud(LpExponent::inf());
  const std::vector<std::size_t> none, c1 = {1}, y1 = {1}, ystar = {0}, cbad = {7};
  CHECK_THROWS_AS(mixed_rips_criterion(w, none, y1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mixed_rips_criterion(w, c1, none, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mixed_rips_criterion(w, c1, ystar, 1.0), std::invalid_argument);
  CHECK_THROWS(mixed_rips_criterion(w, cbad, y1, 1.0));
}

TEST_CASE("rips_wedge equals brute-force rips on the merged table") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> ts(0.05, 3.0);
  for (int i = 0; i < 300; ++i) {
    const WedgeCloud w = random_wedge_cloud(rng, {4, 4, kPs[i % 4]});
    const Wedge ow(w);
    const int n = static_cast<int>(w.vertices().size());
    const int md = default_max_dim(w.vertices().size());
    const double t = ts(rng);
    const auto want = oracle::rips([&](int a, int b) { return ow.vd(a, b); }, n, t, md);
    CHECK(oracle::as_set(rips_wedge(w, t, md)) == want);
  }
}

TEST_CASE("ambient cech in the wedge equals brute force over all wedge points") {
  std::mt19937_64 rng(1618);
  std::uniform_real_distribution<double> ts(0.05, 3.0);
  for (int i = 0; i < 200; ++i) {
    const WedgeCloud w = random_wedge_cloud(rng, {4, 4, kPs[i % 4]});
    const Wedge ow(w);
    const int md = default_max_dim(w.vertices().size());
    const double t = ts(rng);
    const auto want = oracle::cech([&](int a, int b) { return ow(a, b); }, ow.vertex_of, ow.all(), t, md);
    CHECK(oracle::as_set(cech_wedge_ambient(w, t, md, default_oracles(w))) == want);
  }
}

TEST_CASE("the anchor ball radius is the lp residual") {
  // sigma = {b}, tau = {u} with r_Y = 0.8, t = 1, p = 2: the C-side
  // query adds the anchor with radius sqrt(1 - 0.64) = 0.6.
  const WedgeCloud w = line_cloud(LpExponent::finite(2));
  auto base = default_oracles(w);
  auto rec_c = std::make_shared<RecordingOracle>(base.c_side);
  const WedgeOracles oracles{rec_c, base.y_side};
  const std::vector<std::size_t> sigma = {2}, tau = {1};
  const auto cert = cech_mixed_criterion(w, sigma, tau, 1.0, oracles);
  REQUIRE(rec_c->radii.size() == 2);
  CHECK(rec_c->centers == std::vector<std::size_t>{2, 0});
  CHECK(rec_c->radii[0] == 1.0);
  CHECK(rec_c->radii[1] == doctest::Approx(0.6).epsilon(1e-14));
  // The anchor itself (r_C = 0) is a witness: d(theta, b) = 0.5 <= 1.
  CHECK(cert.verdict);
  CHECK(cert.witness_side == Side::C);
  CHECK(cert.b == 0.8);
}

TEST_CASE("mixed cech is wider than mixed rips") {
  const WedgeCloud w = line_cloud(LpExponent::finite(2));
  const auto oracles = default_oracles(w);
  const std::vector<std::size_t> sigma = {1}, tau = {1};
  // ||(1, 0.8)||_2 > 1, yet the anchor is within 1 of a and within 0.6 of itself.
  CHECK_FALSE(mixed_rips_criterion(w, sigma, tau, 1.0).verdict);
  const auto yes = cech_mixed_criterion(w, sigma, tau, 1.0, oracles);
  CHECK(yes.verdict);
  CHECK(yes.witness_side == Side::C);
  const auto no = cech_mixed_criterion(w, sigma, tau, 0.95, oracles);
  CHECK_FALSE(no.verdict);
  CHECK_FALSE(no.witness_side.has_value());
}

TEST_CASE("mixed cech falls back to the Y side") {
  // r_C(c) = 0.5; r_Y(u) = 1.2, r_Y(v) = 0.7, d(u, v) = 0.6. At t = 1 the
  // C side is closed off by b = 1.2 > t, and v witnesses {c, u} from the Y side.
  const FiniteMetric c({{0, 0.5}, {0.5, 0}});
  const FiniteMetric y({{0, 1.2, 0.7}, {1.2, 0, 0.6}, {0.7, 0.6, 0}});
  const WedgeCloud w(PointedFiniteMetric(c, 0), PointedFiniteMetric(y, 0), BKParams{}, false);
  const std::vector<std::size_t> sigma = {1}, tau = {1};
  const auto cert = cech_mixed_criterion(w, sigma, tau, 1.0, default_oracles(w));
  CHECK(cert.verdict);
  CHECK(cert.witness_side == Side::Y);
  CHECK(cert.witness.witness_index == 2u);
}

TEST_CASE("solver failure in a mixed query becomes SolverError") {
  const WedgeCloud w = line_cloud(LpExponent::inf());
  const auto base = default_oracles(w);
  const WedgeOracles stuck{std::make_shared<NeverOracle>(3), base.y_side};
  const std::vector<std::size_t> sigma = {1}, tau = {1};
  CHECK_THROWS_AS(cech_mixed_criterion(w, sigma, tau, 2.0, stuck), SolverError);
  CHECK_THROWS_AS(cech_wedge_ambient(w, 2.0, 2, stuck), SolverError);
  const WedgeOracles wrong{std::make_shared<NeverOracle>(5), base.y_side};
  CHECK_THROWS_AS(cech_wedge_ambient(w, 2.0, 2, wrong), std::invalid_argument);
}

TEST_CASE("decomposition audit passes on random clouds") {
  std::mt19937_64 rng(99);
  const std::vector<double> grid = {0.2, 0.5, 1.0, 1.7, 2.5};
  for (int i = 0; i < 60; ++i) {
    const WedgeCloud w = random_wedge_cloud(rng, {4, 3, kPs[i % 4]});
    const auto oracles = default_oracles(w);
    const AuditReport r = decomposition_audit(w, grid, default_max_dim(w.vertices().size()), &oracles);
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
  const std::vector<double> empty;
  CHECK_THROWS_AS(decomposition_audit(line_cloud(LpExponent::inf()), empty, 1), std::invalid_argument);
}

TEST_CASE("attachment bounds") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const WedgeCloud w = random_wedge_cloud(rng, {4, 3, kPs[i % 4]});
    for (std::size_t c = 0; c < w.c_side().size(); ++c) {
      const AttachmentBounds b = attachment_audit(w, c);
      CHECK(b.holds());
      CHECK(b.lower == w.c_side().metric()(c, w.anchor()));
    }
  }
  const WedgeCloud lone(PointedFiniteMetric(FiniteMetric(DistanceTable{{0.0}}), 0), PointedFiniteMetric(FiniteMetric(DistanceTable{{0.0}}), 0),
                        BKParams{});
  CHECK_THROWS_AS(attachment_audit(lone, 0), std::invalid_argument);
}

}  // TEST_SUITE
