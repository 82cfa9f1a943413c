#include "bk/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bk {

namespace {

std::vector<Simplex> vertices_only(int n) {
  std::vector<Simplex> out;
  for (int v = 0; v < n; ++v) out.push_back(Simplex{v});
  return out;
}

std::vector<Simplex> full(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return {Simplex(v)};
}

std::vector<Simplex> bipartite(int m, int n) {
  std::vector<Simplex> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out.push_back(Simplex{i, m + j});
  return out;
}

ComplexExpectation expect(ComplexKind kind, double t, std::vector<Simplex> maximal,
                          std::optional<std::vector<std::size_t>> betti, std::string note,
                          std::optional<bool> contractible = std::nullopt) {
  return {kind, t, std::move(betti), std::move(maximal), contractible, std::move(note)};
}

CloudSpec ray_cloud(bool include_anchor) {
  CloudSpec s;
  s.c_model = "ray";
  s.scalar_points = {0.0, 1.0, 4.0};
  s.c_labels = {"x0", "x1", "x4"};
  s.anchor = 1;
  s.include_anchor = include_anchor;
  s.y_labels = {"*"};
  return s;
}

void set_loop_y_side(CloudSpec& s, const ScenarioOptions& o) {
  s.y_distances = {{0.0, o.r_plus, o.r_minus}, {o.r_plus, 0.0, o.D}, {o.r_minus, o.D, 0.0}};
  s.y_labels = {"*", "y+", "y-"};
  s.cb_norms = {0.0, 1.0, 1.0};
}

// Loop and cone expectations for a cloud whose vertices are two C points at
// radius 1 and distance 2, then y+ and y-.
void add_loop_expectations(Scenario& sc, const ScenarioOptions& o) {
  const double lo = std::max({1.0, o.r_plus, o.r_minus});
  const double hi = std::min(2.0, o.D);
  std::vector<double> ts;
  if (lo < hi) ts.push_back(lo);
  if (lo <= 1.5 && 1.5 < hi && lo != 1.5) ts.push_back(1.5);
  for (double t : ts) {
    sc.expected.push_back(expect(ComplexKind::Rips, t, bipartite(2, 2), std::vector<std::size_t>{1, 1, 0},
                                 "the 4-cycle K22"));
    sc.expected.push_back(expect(ComplexKind::CechAmbient, t, full(4), std::vector<std::size_t>{1, 0, 0, 0},
                                 "cone over the glued basepoint", true));
  }
}

Scenario cp_ray() {
  Scenario sc;
  sc.id = "cp-ray";
  sc.summary = "Bures ray cloud {x0, x1, x4}: Rips thresholds at t = 1 and t = 2";
  sc.spec = ray_cloud(true);
  sc.grid = {0.5, 0.99, 1.0, 1.5, 1.99, 2.0, 3.0};
  sc.max_dim = 2;
  const std::vector<Simplex> path = {Simplex{0, 1}, Simplex{1, 2}};
  for (double t : {0.5, 0.99}) sc.expected.push_back(expect(ComplexKind::Rips, t, vertices_only(3), {{3, 0}}, "discrete"));
  for (double t : {1.0, 1.5, 1.99}) sc.expected.push_back(expect(ComplexKind::Rips, t, path, {{1, 0}}, "path x0-x1-x4"));
  for (double t : {2.0, 3.0})
    sc.expected.push_back(expect(ComplexKind::Rips, t, full(3), {{1, 0, 0}}, "full 2-simplex", true));
  return sc;
}

Scenario cp_hellinger() {
  Scenario sc;
  sc.id = "cp-hellinger-dim2";
  sc.summary = "Hellinger cloud (1,0), (0,1), (1,1): Rips thresholds at 1 and sqrt(2), no loops";
  sc.spec.c_model = "hellinger";
  sc.spec.hellinger_points = {{{1.0, 0.0}}, {{0.0, 1.0}}, {{1.0, 1.0}}};
  sc.spec.c_labels = {"z1", "z2", "z3"};
  sc.spec.anchor = 2;
  sc.spec.y_labels = {"*"};
  sc.grid = {0.5, 1.0, 1.2, 1.5};
  sc.max_dim = 2;
  const std::vector<Simplex> vee = {Simplex{0, 2}, Simplex{1, 2}};
  sc.expected.push_back(expect(ComplexKind::Rips, 0.5, vertices_only(3), {{3, 0}}, "isolated"));
  sc.expected.push_back(expect(ComplexKind::Rips, 1.0, vee, {{1, 0}}, "V-shaped tree"));
  sc.expected.push_back(expect(ComplexKind::Rips, 1.2, vee, {{1, 0}}, "V-shaped tree"));
  sc.expected.push_back(expect(ComplexKind::Rips, std::sqrt(2.0), full(3), {{1, 0, 0}}, "full 2-simplex", true));
  sc.expected.push_back(expect(ComplexKind::Rips, 1.5, full(3), {{1, 0, 0}}, "full 2-simplex", true));
  return sc;
}

Scenario k22(const ScenarioOptions& o) {
  Scenario sc;
  sc.id = "k22";
  sc.summary = "two C points at radius 1 and two Y points at radii r+, r-: Rips is a 4-cycle, ambient Cech a cone";
  sc.spec.c_model = "explicit";
  sc.spec.c_distances = {{0.0, 1.0, 1.0}, {1.0, 0.0, 2.0}, {1.0, 2.0, 0.0}};
  sc.spec.c_labels = {"theta", "x1", "x2"};
  sc.spec.anchor = 0;
  sc.spec.include_anchor = false;
  set_loop_y_side(sc.spec, o);
  sc.spec.y_labels = {"*", "y1", "y2"};
  sc.grid = {0.5, 1.0, 1.5, 2.0};
  sc.max_dim = 3;
  add_loop_expectations(sc, o);
  return sc;
}

Scenario mixed_loop(const ScenarioOptions& o) {
  Scenario sc;
  sc.id = "mixed-loop";
  sc.summary = "ray points x0, x4 anchored at x1 with y+, y-: Rips loop, contractible ambient Cech";
  sc.spec = ray_cloud(false);
  set_loop_y_side(sc.spec, o);
  sc.grid = {0.5, 1.0, 1.5, 2.0};
  sc.max_dim = 3;
  add_loop_expectations(sc, o);
  return sc;
}

Scenario kmn(const ScenarioOptions& o) {
  if (o.m < 1 || o.n < 1 || o.m > 16 || o.n > 16) throw std::invalid_argument("kmn needs 1 <= m, n <= 16");
  Scenario sc;
  sc.id = "kmn";
  sc.summary = "m C points at radius 1, n Y points at radius 0.9, no within-side edges: Rips is K_{m,n}";
  const auto m = static_cast<std::size_t>(o.m);
  const auto n = static_cast<std::size_t>(o.n);
  sc.spec.c_model = "explicit";
  sc.spec.c_distances.assign(m + 1, std::vector<double>(m + 1, 2.0));
  sc.spec.c_labels = {"theta"};
  for (std::size_t i = 0; i <= m; ++i) {
    sc.spec.c_distances[i][i] = 0.0;
    if (i > 0) {
      sc.spec.c_distances[0][i] = sc.spec.c_distances[i][0] = 1.0;
      sc.spec.c_labels.push_back("x" + std::to_string(i));
    }
  }
  sc.spec.include_anchor = false;
  sc.spec.y_distances.assign(n + 1, std::vector<double>(n + 1, 1.8));
  sc.spec.y_labels = {"*"};
  sc.spec.cb_norms.assign(n + 1, 1.0);
  sc.spec.cb_norms[0] = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    sc.spec.y_distances[j][j] = 0.0;
    if (j > 0) {
      sc.spec.y_distances[0][j] = sc.spec.y_distances[j][0] = 0.9;
      sc.spec.y_labels.push_back("y" + std::to_string(j));
    }
  }
  sc.grid = {0.5, 1.0, 1.5};
  sc.max_dim = std::min<int>(o.m + o.n - 1, 7);
  const std::size_t loops = (m - 1) * (n - 1);
  sc.expected.push_back(expect(ComplexKind::Rips, 1.0, bipartite(o.m, o.n), std::vector<std::size_t>{1, loops},
                               "the graph K_{m,n}"));
  return sc;
}

Scenario cp_cech() {
  Scenario sc;
  sc.id = "cp-cech-intrinsic-vs-ambient";
  sc.summary = "ray cloud {x0, x1, x4}: intrinsic Cech jumps at t = 1, ambient Cech at t = 1/2 and t = 1";
  sc.spec = ray_cloud(true);
  sc.grid = {0.4, 0.5, 0.6, 0.99, 1.0};
  sc.kind = ComplexKind::CechAmbient;
  sc.max_dim = 2;
  const std::vector<Simplex> path = {Simplex{0, 1}, Simplex{1, 2}};
  for (double t : sc.grid) {
    if (t < 1.0)
      sc.expected.push_back(expect(ComplexKind::CechIntrinsic, t, vertices_only(3), {{3, 0}}, "discrete"));
    else
      sc.expected.push_back(expect(ComplexKind::CechIntrinsic, t, full(3), {{1, 0, 0}}, "full 2-simplex", true));
    if (t < 0.5)
      sc.expected.push_back(expect(ComplexKind::CechAmbient, t, vertices_only(3), {{3, 0}}, "discrete"));
    else if (t < 1.0)
      sc.expected.push_back(expect(ComplexKind::CechAmbient, t, path, {{1, 0}}, "path x0-x1-x4"));
    else
      sc.expected.push_back(expect(ComplexKind::CechAmbient, t, full(3), {{1, 0, 0}}, "full 2-simplex", true));
  }
  return sc;
}

Scenario anchor_separation(const ScenarioOptions& o) {
  if (o.n_max < 1) throw std::invalid_argument("anchor-separation needs n_max >= 1");
  Scenario sc;
  sc.id = "anchor-separation";
  sc.summary = "scalar points 0, 1, 4 with anchors 1 and 4 and the shrinking non-CP family psi_n = i/n";
  sc.spec.c_model = "scalar";
  sc.spec.scalar_points = {0.0, 1.0, 4.0};
  sc.spec.c_labels = {"x0", "theta1", "theta2"};
  sc.spec.anchor = 1;
  sc.alt_anchor = 2;
  // psi_n sits at 1/sqrt(n) on a line through *; the snowflake applied on
  // load gives radii lambda * n^{-alpha/2}, the largest the cb-norm 1/n allows.
  const auto count = static_cast<std::size_t>(o.n_max) + 1;
  std::vector<double> pos(count, 0.0);
  sc.spec.y_labels = {"*"};
  sc.spec.cb_norms = {0.0};
  for (std::size_t k = 1; k < count; ++k) {
    pos[k] = 1.0 / std::sqrt(static_cast<double>(k));
    sc.spec.y_labels.push_back("psi" + std::to_string(k));
    sc.spec.cb_norms.push_back(1.0 / static_cast<double>(k));
  }
  sc.spec.y_distances.assign(count, std::vector<double>(count, 0.0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) sc.spec.y_distances[i][j] = std::abs(pos[i] - pos[j]);
  sc.spec.y_snowflaked = false;
  sc.grid = {0.25, 0.5, 1.0};
  sc.max_dim = 1;
  ComplexExpectation connected;
  connected.kind = ComplexKind::Rips;
  connected.t = 1.0;
  connected.betti = std::vector<std::size_t>{1};
  connected.note = "connected through the anchor";
  sc.expected.push_back(connected);
  return sc;
}

Scenario ksw_scalar() {
  Scenario sc;
  sc.id = "ksw-scalar";
  sc.summary = "scalar CP points on [0, 5] for the Bures versus cb-norm comparison";
  sc.spec.c_model = "scalar";
  sc.spec.scalar_points = {0.0, 1.25, 2.5, 3.75, 5.0};
  sc.spec.anchor = 0;
  sc.spec.y_labels = {"*"};
  sc.grid = {0.5, 1.0, 3.0};
  sc.max_dim = 4;
  sc.expected.push_back(expect(ComplexKind::Rips, 3.0, full(5), {{1, 0, 0, 0, 0}}, "full simplex", true));
  return sc;
}

bool same_simplices(std::vector<Simplex> a, std::vector<Simplex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string list(const std::vector<Simplex>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x.to_string();
  return out;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = {"cp-ray",          "cp-hellinger-dim2", "k22",
                                               "kmn",             "mixed-loop",        "cp-cech-intrinsic-vs-ambient",
                                               "anchor-separation", "ksw-scalar"};
  return ids;
}

Scenario make_scenario(const std::string& id, const ScenarioOptions& o) {
  if (id == "cp-ray") return cp_ray();
  if (id == "cp-hellinger-dim2") return cp_hellinger();
  if (id == "k22") return k22(o);
  if (id == "kmn") return kmn(o);
  if (id == "mixed-loop") return mixed_loop(o);
  if (id == "cp-cech-intrinsic-vs-ambient") return cp_cech();
  if (id == "anchor-separation") return anchor_separation(o);
  if (id == "ksw-scalar") return ksw_scalar();
  throw std::invalid_argument("unknown scenario '" + id + "'");
}

std::vector<ExpectationOutcome> check_expectations(const Scenario& sc) {
  const WedgeCloud cloud = build_cloud(sc.spec);
  const WedgeOracles oracles = ambient_oracles(sc.spec, cloud);
  std::vector<ExpectationOutcome> out;
  for (const ComplexExpectation& e : sc.expected) {
    ExpectationOutcome r{e, true, ""};
    const SimplicialComplex k = build_complex(cloud, e.kind, e.t, sc.max_dim, &oracles);
    const BettiNumbers b = betti(k);
    std::ostringstream os;
    if (e.maximal && !same_simplices(k.maximal(), *e.maximal)) {
      r.pass = false;
      os << "maximal simplices " << list(k.maximal()) << ", expected " << list(*e.maximal) << "; ";
    }
    if (e.betti) {
      for (std::size_t i = 0; i < e.betti->size(); ++i) {
        const std::size_t got = i < b.betti.size() ? b.betti[i] : 0;
        if (got != (*e.betti)[i]) {
          r.pass = false;
          os << "beta_" << i << " = " << got << ", expected " << (*e.betti)[i] << "; ";
        }
      }
    }
    if (e.contractible && b.contractible != *e.contractible) {
      r.pass = false;
      os << "contractible flag " << b.contractible << ", expected " << *e.contractible << "; ";
    }
    r.detail = os.str();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bk
