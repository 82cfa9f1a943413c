#include "bk/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "bk/cloud_spec.hpp"
#include "bk/complexes.hpp"
#include "bk/homology.hpp"
#include "bk/random_clouds.hpp"
#include "bk/scenarios.hpp"

namespace bk {

namespace {

SimplicialComplex complex_of(int max_dim, std::initializer_list<Simplex> simplices) {
  SimplicialComplex k(max_dim);
  for (const Simplex& s : simplices) k.insert(s);
  return k;
}

std::string str(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  RowResult result(const std::string& summary) const {
    RowResult r;
    r.pass = failed_ == 0;
    std::ostringstream os;
    os << summary << " (" << checks_ - failed_ << "/" << checks_ << " checks)";
    for (const auto& f : failures_) os << "; " << f;
    r.detail = os.str();
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<Scenario> default_scenarios() {
  std::vector<Scenario> out;
  for (const auto& id : scenario_ids()) out.push_back(make_scenario(id));
  return out;
}

RowResult row_ray_thresholds() {
  Tally tally;
  const FiniteMetric m = ray_metric({0.0, 1.0, 4.0}, {"x0", "x1", "x4"});
  const auto discrete = complex_of(2, {Simplex{0}, Simplex{1}, Simplex{2}});
  const auto path = complex_of(2, {Simplex{0, 1}, Simplex{1, 2}});
  const auto tri = complex_of(2, {Simplex{0, 1, 2}});
  for (double t : {0.5, 0.99}) tally.check(rips(m, t, 2) == discrete, "t=" + str(t) + " not discrete");
  for (double t : {1.0, 1.5, 1.99}) tally.check(rips(m, t, 2) == path, "t=" + str(t) + " not the path");
  for (double t : {2.0, 3.0}) tally.check(rips(m, t, 2) == tri, "t=" + str(t) + " not the 2-simplex");
  return tally.result("ray Rips stages");
}

RowResult row_k22() {
  Tally tally;
  const auto four_cycle = complex_of(3, {Simplex{0, 2}, Simplex{0, 3}, Simplex{1, 2}, Simplex{1, 3}});
  const double t = 1.5;

  // The realizable cloud: D = 1.8 = r+ + r-.
  const Scenario sc = make_scenario("mixed-loop");
  const WedgeCloud cloud = build_cloud(sc.spec);
  const SimplicialComplex k = rips_wedge(cloud, t, 3);
  const BettiNumbers b = betti(k);
  tally.check(k == four_cycle, "realizable cloud: Rips is not the 4-cycle");
  tally.check(k == rips(full_distance_table(cloud), t, 3), "realizable cloud: decomposition mismatch");
  tally.check(b.betti[0] == 1 && b.betti[1] == 1, "realizable cloud: Betti numbers wrong");

  // The literal four-point table with D = 1.9.
  const FiniteMetric literal({{0, 2, 1, 1}, {2, 0, 1, 1}, {1, 1, 0, 1.9}, {1, 1, 1.9, 0}});
  const SimplicialComplex kl = rips(literal, t, 3);
  const BettiNumbers bl = betti(kl);
  tally.check(kl == four_cycle, "D=1.9 table: Rips is not the 4-cycle");
  tally.check(bl.betti[0] == 1 && bl.betti[1] == 1, "D=1.9 table: Betti numbers wrong");

  // D = 1.9 with r+ = r- = 0.9 is not a metric on {*, y+, y-}.
  ScenarioOptions o;
  o.D = 1.9;
  bool rejected = false;
  try {
    build_cloud(make_scenario("mixed-loop", o).spec);
  } catch (const MetricError&) {
    rejected = true;
  }
  tally.check(rejected, "D=1.9 wedge cloud was accepted");
  return tally.result("4 cross edges, no triangles, beta=(1,1) at D=1.8 through the wedge and on the literal D=1.9 "
                      "table; D=1.9 > r+ + r- is rejected as a wedge cloud");
}

RowResult row_kmn() {
  Tally tally;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      ScenarioOptions o;
      o.m = m;
      o.n = n;
      const Scenario sc = make_scenario("kmn", o);
      const SimplicialComplex k = rips_wedge(build_cloud(sc.spec), 1.0, sc.max_dim);
      const BettiNumbers b = betti(k);
      const auto expected = static_cast<std::size_t>((m - 1) * (n - 1));
      const long graph = static_cast<long>(k.count(1)) - static_cast<long>(k.count(0)) +
                         static_cast<long>(component_count(k));
      const std::string tag = "K" + std::to_string(m) + "," + std::to_string(n);
      tally.check(k.count(1) == static_cast<std::size_t>(m * n) && (k.max_dim() < 2 || k.count(2) == 0),
                  tag + " is not the bipartite graph");
      tally.check(b.betti[1] == expected, tag + ": rank path gives beta_1=" + std::to_string(b.betti[1]));
      tally.check(graph == static_cast<long>(expected), tag + ": graph formula gives " + std::to_string(graph));
    }
  return tally.result("beta_1 = (m-1)(n-1) for m, n in 1..4");
}

RowResult row_decomposition() {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> grid = {0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
  auto compare = [&](const WedgeCloud& cloud, int max_dim, const std::string& tag) {
    const FiniteMetric table = full_distance_table(cloud);
    for (double t : grid)
      tally.check(rips_wedge(cloud, t, max_dim) == rips(table, t, max_dim), tag + " t=" + str(t));
  };
  for (const Scenario& sc : default_scenarios()) compare(build_cloud(sc.spec), sc.max_dim, sc.id);
  std::mt19937_64 rng(20240501);
  std::size_t clouds = 0;
  for (const LpExponent& p : {LpExponent::finite(1.0), LpExponent::finite(2.0), LpExponent::inf()})
    for (int trial = 0; trial < 1000; ++trial, ++clouds) {
      const WedgeCloud cloud = random_wedge_cloud(rng, {4, 4, p});
      compare(cloud, default_max_dim(cloud.vertices().size()), "random p=" + p.to_string() + " #" + std::to_string(trial));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tally.check(secs <= 60.0, "runtime " + str(secs) + " s exceeds 60 s");
  return tally.result("all scenarios and " + std::to_string(clouds) + " random clouds, 6 scales, " + str(secs) + " s");
}

RowResult row_cech() {
  Tally tally;
  const FiniteMetric m = ray_metric({0.0, 1.0, 4.0});
  const RayOracle ray({0.0, 1.0, 4.0});
  const std::vector<std::size_t> pts = {0, 1, 2};
  const auto discrete = complex_of(2, {Simplex{0}, Simplex{1}, Simplex{2}});
  const auto path = complex_of(2, {Simplex{0, 1}, Simplex{1, 2}});
  const auto tri = complex_of(2, {Simplex{0, 1, 2}});
  for (double t : {0.4, 0.5, 0.6, 0.99, 1.0}) {
    const auto& intrinsic = t < 1.0 ? discrete : tri;
    const auto& ambient = t < 0.5 ? discrete : (t < 1.0 ? path : tri);
    tally.check(cech_intrinsic(m, t, 2) == intrinsic, "intrinsic at t=" + str(t));
    tally.check(cech_ambient(pts, ray, t, 2) == ambient, "ambient at t=" + str(t));
  }
  return tally.result("intrinsic discrete->simplex at 1; ambient discrete->path at 1/2 ->simplex at 1");
}

RowResult row_cone() {
  Tally tally;
  for (const char* id : {"mixed-loop", "k22"}) {
    const Scenario sc = make_scenario(id);
    const WedgeCloud cloud = build_cloud(sc.spec);
    const SimplicialComplex cech = cech_wedge_ambient(cloud, 1.5, 3, ambient_oracles(sc.spec, cloud));
    const BettiNumbers bc = betti(cech);
    const BettiNumbers br = betti(rips_wedge(cloud, 1.5, 3));
    tally.check(cech == full_simplex(4, 3), std::string(id) + ": ambient Cech is not the 3-simplex");
    tally.check(bc.betti[1] == 0 && bc.contractible, std::string(id) + ": ambient Cech not a cone");
    tally.check(br.betti[1] == 1, std::string(id) + ": Rips beta_1 != 1");
  }
  return tally.result("ambient Cech is the full 3-simplex while Rips has beta_1 = 1 at t = 1.5");
}

RowResult row_sandwich() {
  Tally tally;
  for (const Scenario& sc : default_scenarios()) {
    const WedgeCloud cloud = build_cloud(sc.spec);
    const WedgeOracles oracles = ambient_oracles(sc.spec, cloud);
    const FiniteMetric table = full_distance_table(cloud);
    for (double t : {0.25, 0.5, 1.0, 1.5, 2.0}) {
      tally.check(sandwich_check(table, nullptr, t, sc.max_dim), sc.id + " intrinsic t=" + str(t));
      const SimplicialComplex amb = cech_wedge_ambient(cloud, t, sc.max_dim, oracles);
      tally.check(rips(table, t, sc.max_dim).is_subcomplex_of(amb) &&
                      amb.is_subcomplex_of(rips(table, 2 * t, sc.max_dim)),
                  sc.id + " ambient t=" + str(t));
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> scale(0.0, 2.5);
  for (int trial = 0; trial < 500; ++trial) {
    // Six cloud points inside a nine-point ambient space.
    const FiniteMetric ambient = random_metric(rng, 9);
    const std::vector<std::size_t> pts = {0, 1, 2, 3, 4, 5};
    const FiniteSetOracle oracle(ambient);
    const AmbientEmbedding emb{&oracle, pts};
    const double t = scale(rng);
    tally.check(sandwich_check(ambient.restrict_to(pts), &emb, t, 5), "random metric #" + std::to_string(trial));
  }
  return tally.result("VR_t <= C_t <= VR_2t on all scenarios and 500 random metrics");
}

RowResult row_ksw() {
  Tally tally;
  double worst_gap = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double c = 5.0 * i / 19.0;
      const double d = 5.0 * j / 19.0;
      for (int model = 0; model < 2; ++model) {
        const double beta = model == 0 ? bures_scalar(c, d) : bures_ray(c, d);
        const KswResult r = ksw_bounds(beta, std::abs(c - d), c, d);
        const std::string tag = std::string(model == 0 ? "scalar" : "ray") + " (" + str(c) + "," + str(d) + ")";
        tally.check(r.holds, tag + " bounds fail");
        if (r.lower_checked) {
          worst_gap = std::max(worst_gap, std::abs(r.lower - beta));
          tally.check(std::abs(r.lower - beta) <= 1e-10, tag + " lower bound not tight");
        }
      }
    }
  return tally.result("both bounds on a 20x20 grid, worst |lower - beta| = " + str(worst_gap));
}

RowResult row_anchor() {
  Tally tally;
  for (const Scenario& sc : default_scenarios()) {
    const WedgeCloud cloud = build_cloud(sc.spec);
    const std::size_t n = cloud.c_side().size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const DistortionBound d = gh_distortion_bound(cloud.with_anchor(a), cloud.with_anchor(b));
        tally.check(d.holds(), sc.id + " anchors " + std::to_string(a) + "," + std::to_string(b) + ": distortion " +
                                   str(d.distortion) + " > " + str(d.bound));
      }
  }
  ScenarioOptions o;
  o.n_max = 256;
  const Scenario sc = make_scenario("anchor-separation", o);
  const WedgeCloud cloud = build_cloud(sc.spec);
  const WedgeCloud alt = cloud.with_anchor(*sc.alt_anchor);
  const double beta = cloud.c_side().metric()(cloud.anchor(), alt.anchor());
  const double uniform = anchor_uniform_distance(cloud, alt);
  tally.check(uniform >= beta - 0.1, "uniform difference " + str(uniform) + " below beta - 0.1");
  tally.check(gh_distortion_bound(cloud, alt).holds(), "GH distortion above beta");
  ScalarScenarioConfig cfg;
  cfg.n_max = 256;
  tally.check(scalar_counterexample_scenario(cfg).consistent(), "scalar sequence report inconsistent");
  return tally.result("pointwise anchor bound; psi_n family reaches " + str(uniform) + " against beta = " + str(beta));
}

RowResult row_attachment() {
  Tally tally;
  std::mt19937_64 rng(11);
  const FiniteMetric c = ray_metric({0.0, 1.0, 4.0, 9.0});
  for (double eps : {0.1, 0.01})
    for (const LpExponent& p : {LpExponent::finite(1.0), LpExponent::finite(2.0), LpExponent::inf()}) {
      std::vector<FiniteMetric> ys;
      const double r[] = {0.0, eps, eps / 2, eps / 3};
      DistanceTable line(4, std::vector<double>(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) line[i][j] = std::abs(r[i] - r[j]);
      ys.emplace_back(line);
      for (int k = 0; k < 5; ++k) {
        const FiniteMetric m = random_metric(rng, 4);
        double max_r = 0.0;
        for (std::size_t i = 1; i < 4; ++i) max_r = std::max(max_r, m(0, i));
        ys.push_back(snowflake(m, eps / max_r, 1.0));
      }
      for (const FiniteMetric& y : ys) {
        const WedgeCloud cloud(PointedFiniteMetric(c, 1), PointedFiniteMetric(y, 0), BKParams{1.0, 1.0, p});
        for (std::size_t x = 0; x < c.size(); ++x) {
          const AttachmentBounds a = attachment_audit(cloud, x);
          const double cap = lp_combine(a.lower, eps, p);
          tally.check(a.holds() && a.lower <= a.upper + kMetricTol && a.upper <= cap + kMetricTol,
                      "eps=" + str(eps) + " p=" + p.to_string() + " x=" + std::to_string(x) + ": " + str(a.upper) +
                          " outside [" + str(a.lower) + ", " + str(cap) + "]");
        }
      }
    }
  return tally.result("min cross distance in [r_C(x), ||(r_C(x), eps)||_p]");
}

RowResult row_metric_axioms() {
  Tally tally;
  std::mt19937_64 rng(4242);
  const LpExponent ps[] = {LpExponent::finite(1.0), LpExponent::finite(2.0), LpExponent::finite(3.5),
                           LpExponent::inf()};
  for (int trial = 0; trial < 1000; ++trial) {
    const WedgeCloud cloud = random_wedge_cloud(rng, {4, 4, ps[trial % 4]});
    bool ok = true;
    try {
      full_distance_table(cloud);
    } catch (const MetricError& e) {
      ok = false;
    }
    tally.check(ok, "random wedge cloud #" + std::to_string(trial));
  }
  for (double alpha : {0.3, 0.5, 1.0})
    for (int trial = 0; trial < 200; ++trial) {
      const FiniteMetric m = random_metric(rng, 7, 0.01, 3.0);
      const FiniteMetric s = snowflake(m, 1.7, alpha);
      tally.check(!find_violation(s.table()).has_value(), "snowflake alpha=" + str(alpha));
    }
  return tally.result("1000 random wedge tables and 600 snowflakes satisfy the metric axioms");
}

RowResult row_orthant() {
  Tally tally;
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_real_distribution<double> pos(0.0, 3.0);
  std::uniform_real_distribution<double> rad(0.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    BallIntersectionQuery q;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
      q.centers.push_back({pos(rng)});
      q.radii.push_back(rad(rng));
    }
    const WitnessResult exact = ray_ball_intersection(q);
    const WitnessResult solved = orthant_ball_intersection(q, 1e-9);
    const double gap = std::abs(exact.margin - solved.margin);
    worst = std::max(worst, gap);
    const std::string tag = "query #" + std::to_string(trial);
    tally.check(solved.status != WitnessStatus::NonConverged, tag + " did not converge");
    tally.check(gap <= 1e-7, tag + " margins differ by " + str(gap));
    if (std::abs(exact.margin) > 1e-7) tally.check(exact.feasible() == solved.feasible(), tag + " sign disagrees");
  }
  BallIntersectionQuery q{{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}, {1.0, 1.0, 1.0}};
  const WitnessResult at1 = orthant_ball_intersection(q);
  bool witness_ok = true;
  for (const auto& c : q.centers) witness_ok = witness_ok && std::hypot(1.0 - c[0], 1.0 - c[1]) <= 1.0;
  tally.check(at1.feasible() && witness_ok, "radii 1 not certified feasible with witness (1,1)");
  q.radii = {0.5, 0.5, 0.5};
  tally.check(orthant_ball_intersection(q).status == WitnessStatus::Infeasible, "radii 0.5 not infeasible");
  return tally.result("500 one-dimensional queries, worst margin gap " + str(worst) + "; (1,1) example");
}

}  // namespace

RowResult hellinger_row(const HellingerDistance& distance) {
  Tally tally;
  const std::vector<HellingerPoint> z = {{{1.0, 0.0}}, {{0.0, 1.0}}, {{1.0, 1.0}}};
  DistanceTable table(3, std::vector<double>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) table[i][j] = distance(z[i], z[j]);
  tally.check(std::abs(table[0][1] - std::sqrt(2.0)) <= 1e-12, "d(z1,z2) = " + str(table[0][1]));
  tally.check(std::abs(table[0][2] - 1.0) <= 1e-12, "d(z1,z3) = " + str(table[0][2]));
  tally.check(std::abs(table[1][2] - 1.0) <= 1e-12, "d(z2,z3) = " + str(table[1][2]));
  try {
    const FiniteMetric m(table);
    const auto discrete = complex_of(2, {Simplex{0}, Simplex{1}, Simplex{2}});
    const auto vee = complex_of(2, {Simplex{0, 2}, Simplex{1, 2}});
    const auto tri = complex_of(2, {Simplex{0, 1, 2}});
    for (double t : {0.5, 0.99, 1.0, 1.2, std::sqrt(2.0), 1.5}) {
      const SimplicialComplex k = rips(m, t, 2);
      const auto& expected = t < 1.0 ? discrete : (t < std::sqrt(2.0) ? vee : tri);
      tally.check(k == expected, "Rips stage at t=" + str(t));
      tally.check(betti(k).betti[1] == 0, "beta_1 != 0 at t=" + str(t));
    }
  } catch (const MetricError& e) {
    tally.check(false, std::string("distance table rejected: ") + e.what());
  }
  return tally.result("distances (sqrt2, 1, 1); isolated -> V-tree at 1 -> simplex at sqrt2; no H_1");
}

const std::vector<AcceptanceRow>& acceptance_rows() {
  static const std::vector<AcceptanceRow> rows = {
      {1, "Bures ray Rips thresholds", row_ray_thresholds},
      {2, "Hellinger dimension-2 example", [] { return hellinger_row(hellinger); }},
      {3, "K22 loop", row_k22},
      {4, "K_{m,n} rank formula", row_kmn},
      {5, "Rips wedge decomposition", row_decomposition},
      {6, "Cech intrinsic vs ambient", row_cech},
      {7, "Cone effect", row_cone},
      {8, "Sandwich property", row_sandwich},
      {9, "KSW inequalities", row_ksw},
      {10, "Anchor geometry", row_anchor},
      {11, "Attachment bounds", row_attachment},
      {12, "Metric axioms", row_metric_axioms},
      {13, "Orthant witness solver", row_orthant},
  };
  return rows;
}

}  // namespace bk
