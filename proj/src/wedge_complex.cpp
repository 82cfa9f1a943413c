#include "bk/wedge_complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bk/complexes.hpp"

namespace bk {

RadialProfile RadialProfile::of(const WedgeCloud& cloud) {
  RadialProfile out;
  for (std::size_t i = 0; i < cloud.c_side().size(); ++i) out.r_c.push_back(cloud.c_side().radius(i));
  for (std::size_t i = 0; i < cloud.y_side().size(); ++i) out.r_y.push_back(cloud.y_side().radius(i));
  return out;
}

namespace {

void check_sides(const WedgeCloud& cloud, std::span<const std::size_t> sigma, std::span<const std::size_t> tau) {
  if (sigma.empty() || tau.empty()) throw std::invalid_argument("mixed simplex needs points on both sides");
  for (std::size_t x : sigma)
    if (x >= cloud.c_side().size()) throw std::out_of_range("C-side index out of range");
  for (std::size_t y : tau) {
    if (y >= cloud.y_side().size()) throw std::out_of_range("Y-side index out of range");
    if (y == cloud.star()) throw std::invalid_argument("* is the glued basepoint, not a Y-side vertex");
  }
}

bool pairwise_within(const FiniteMetric& m, std::span<const std::size_t> pts, double t) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!within_scale(m(pts[i], pts[j]), t)) return false;
  return true;
}

MixedSimplexCertificate certificate_base(const WedgeCloud& cloud, std::span<const std::size_t> sigma,
                                         std::span<const std::size_t> tau) {
  check_sides(cloud, sigma, tau);
  MixedSimplexCertificate c;
  c.sigma.assign(sigma.begin(), sigma.end());
  c.tau.assign(tau.begin(), tau.end());
  for (std::size_t x : sigma) c.a = std::max(c.a, cloud.c_side().radius(x));
  for (std::size_t y : tau) c.b = std::max(c.b, cloud.y_side().radius(y));
  return c;
}

// Component indices of the cloud's vertices on one side.
std::vector<std::size_t> side_points(const WedgeCloud& cloud, Side side) {
  std::vector<std::size_t> out;
  for (const WedgePoint& v : cloud.vertices())
    if (v.side == side) out.push_back(v.index);
  return out;
}

WitnessResult query(const WitnessOracle& oracle, std::vector<std::size_t> centers, std::vector<double> radii) {
  return oracle.intersect(centers, radii);
}

}  // namespace

MixedSimplexCertificate mixed_rips_criterion(const WedgeCloud& cloud, std::span<const std::size_t> sigma,
                                             std::span<const std::size_t> tau, double t) {
  MixedSimplexCertificate c = certificate_base(cloud, sigma, tau);
  c.verdict = pairwise_within(cloud.c_side().metric(), sigma, t) && pairwise_within(cloud.y_side().metric(), tau, t) &&
              within_scale(lp_combine(c.a, c.b, cloud.params().p), t);
  return c;
}

SimplicialComplex rips_wedge(const WedgeCloud& cloud, double t, int max_dim) {
  const std::vector<std::size_t> c_pts = side_points(cloud, Side::C);
  const std::vector<std::size_t> y_pts = side_points(cloud, Side::Y);
  const std::size_t offset = c_pts.size();
  const SimplicialComplex c_rips = rips(cloud.c_side().metric().restrict_to(c_pts), t, max_dim);
  const SimplicialComplex y_rips = rips(cloud.y_side().metric().restrict_to(y_pts), t, max_dim);

  SimplicialComplex out(max_dim);
  for (const Simplex& s : c_rips.all()) out.insert(s);
  std::vector<std::pair<double, Simplex>> y_shifted;
  for (const Simplex& s : y_rips.all()) {
    std::vector<int> v;
    double b = 0.0;
    for (int i : s.vertices()) {
      v.push_back(i + static_cast<int>(offset));
      b = std::max(b, cloud.y_side().radius(y_pts[i]));
    }
    out.insert(Simplex(v));
    y_shifted.emplace_back(b, Simplex(v));
  }
  // The join term only depends on the radial maxima, so with the Y simplices
  // ordered by B the scan for a given sigma stops at the first failure.
  std::stable_sort(y_shifted.begin(), y_shifted.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  for (const Simplex& s : c_rips.all()) {
    double a = 0.0;
    for (int i : s.vertices()) a = std::max(a, cloud.c_side().radius(c_pts[i]));
    for (const auto& [b, tau] : y_shifted) {
      if (!within_scale(lp_combine(a, b, cloud.params().p), t)) break;
      if (static_cast<int>(s.size() + tau.size()) > max_dim + 1) continue;
      std::vector<int> v = s.vertices();
      v.insert(v.end(), tau.vertices().begin(), tau.vertices().end());
      out.insert(Simplex(v));
    }
  }
  return out;
}

WedgeOracles default_oracles(const WedgeCloud& cloud) {
  return {std::make_shared<FiniteSetOracle>(cloud.c_side().metric()),
          std::make_shared<FiniteSetOracle>(cloud.y_side().metric())};
}

MixedSimplexCertificate cech_mixed_criterion(const WedgeCloud& cloud, std::span<const std::size_t> sigma,
                                             std::span<const std::size_t> tau, double t,
                                             const WedgeOracles& oracles) {
  MixedSimplexCertificate c = certificate_base(cloud, sigma, tau);
  const LpExponent& p = cloud.params().p;

  auto attempt = [&](Side side, std::span<const std::size_t> pts, double other_max) {
    const double s = lp_residual(t, other_max, p);
    if (s < 0.0) return false;
    const WitnessOracle& oracle = side == Side::C ? *oracles.c_side : *oracles.y_side;
    std::vector<std::size_t> centers(pts.begin(), pts.end());
    std::vector<double> radii(centers.size(), t);
    centers.push_back(side == Side::C ? cloud.anchor() : cloud.star());
    radii.push_back(s);
    c.witness = query(oracle, std::move(centers), std::move(radii));
    if (c.witness.status == WitnessStatus::NonConverged) {
      std::vector<int> ids;
      for (std::size_t x : sigma) ids.push_back(static_cast<int>(x));
      throw SolverError("witness solver did not converge on the " + std::string(side == Side::C ? "C" : "Y") +
                            "-side query of a mixed simplex",
                        ids);
    }
    return c.witness.feasible();
  };

  if (attempt(Side::C, sigma, c.b))
    c.witness_side = Side::C;
  else if (attempt(Side::Y, tau, c.a))
    c.witness_side = Side::Y;
  c.verdict = c.witness_side.has_value();
  return c;
}

SimplicialComplex cech_wedge_ambient(const WedgeCloud& cloud, double t, int max_dim, const WedgeOracles& oracles) {
  if (!oracles.c_side || !oracles.y_side) throw std::invalid_argument("both side oracles are required");
  if (oracles.c_side->size() != cloud.c_side().size() || oracles.y_side->size() != cloud.y_side().size())
    throw std::invalid_argument("oracle domains must be indexed by component point index");
  const auto& vs = cloud.vertices();
  const int cvc = static_cast<int>(cloud.c_vertex_count());
  return build_monotone_complex(static_cast<int>(vs.size()), max_dim, [&](const std::vector<int>& s) {
    std::vector<std::size_t> sigma, tau;
    for (int v : s) (v < cvc ? sigma : tau).push_back(vs[v].index);
    if (!sigma.empty() && !tau.empty()) {
      try {
        return cech_mixed_criterion(cloud, sigma, tau, t, oracles).verdict;
      } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + " " + Simplex(s).to_string(), s);
      }
    }
    // A pure simplex gains nothing from witnesses across the glue: any such
    // witness is at least as far from every vertex as the basepoint is.
    const WitnessOracle& oracle = sigma.empty() ? *oracles.y_side : *oracles.c_side;
    std::vector<std::size_t>& centers = sigma.empty() ? tau : sigma;
    const WitnessResult r = query(oracle, centers, std::vector<double>(centers.size(), t));
    if (r.status == WitnessStatus::NonConverged)
      throw SolverError("witness solver did not converge on simplex " + Simplex(s).to_string(), s);
    return r.feasible();
  });
}

namespace {

std::string fmt_scale(double t) {
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

void compare(AuditReport& rep, const SimplicialComplex& sub, const SimplicialComplex& super, const std::string& what,
             double t) {
  ++rep.checks;
  if (auto miss = sub.first_missing_from(super))
    rep.failures.push_back("t=" + fmt_scale(t) + ": " + what + " fails at simplex " + miss->to_string());
}

}  // namespace

AuditReport decomposition_audit(const WedgeCloud& cloud, std::span<const double> grid, int max_dim,
                                const WedgeOracles* oracles) {
  if (grid.empty()) throw std::invalid_argument("decomposition audit needs a nonempty scale grid");
  const WedgeOracles fallback = oracles ? WedgeOracles{} : default_oracles(cloud);
  const WedgeOracles& o = oracles ? *oracles : fallback;
  const FiniteMetric table = full_distance_table(cloud);
  const RadialProfile prof = RadialProfile::of(cloud);
  const auto& vs = cloud.vertices();

  AuditReport rep;
  for (double t : grid) {
    const SimplicialComplex decomposed = rips_wedge(cloud, t, max_dim);
    const SimplicialComplex brute = rips(table, t, max_dim);
    const SimplicialComplex brute2 = rips(table, 2.0 * t, max_dim);
    compare(rep, decomposed, brute, "decomposed Rips within brute-force Rips", t);
    compare(rep, brute, decomposed, "brute-force Rips within decomposed Rips", t);

    const SimplicialComplex intrinsic = cech_intrinsic(table, t, max_dim);
    compare(rep, brute, intrinsic, "VR_t within intrinsic Cech", t);
    compare(rep, intrinsic, brute2, "intrinsic Cech within VR_2t", t);
    const SimplicialComplex ambient = cech_wedge_ambient(cloud, t, max_dim, o);
    compare(rep, brute, ambient, "VR_t within ambient Cech", t);
    compare(rep, ambient, brute2, "ambient Cech within VR_2t", t);

    for (std::size_t i = 0; i < cloud.c_vertex_count(); ++i)
      for (std::size_t j = cloud.c_vertex_count(); j < vs.size(); ++j) {
        ++rep.checks;
        const bool expected = within_scale(lp_combine(prof.r_c[vs[i].index], prof.r_y[vs[j].index], cloud.params().p), t);
        const Simplex e{static_cast<int>(i), static_cast<int>(j)};
        if (decomposed.contains(e) != expected)
          rep.failures.push_back("t=" + fmt_scale(t) + ": cross edge " + e.to_string() +
                                 (expected ? " missing" : " unexpected"));
      }
  }
  return rep;
}

AttachmentBounds attachment_audit(const WedgeCloud& cloud, std::size_t c_index) {
  if (cloud.y_side().size() < 2) throw std::invalid_argument("attachment audit needs a Y-side point besides *");
  const WedgePoint x = cloud.point(Side::C, c_index);
  AttachmentBounds out;
  out.lower = cloud.radius(x);
  out.upper = std::numeric_limits<double>::infinity();
  double min_ry = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cloud.y_side().size(); ++j) {
    if (j == cloud.star()) continue;
    out.upper = std::min(out.upper, wedge_distance(cloud, x, {Side::Y, j}));
    min_ry = std::min(min_ry, cloud.y_side().radius(j));
  }
  out.cap = lp_combine(out.lower, min_ry, cloud.params().p);
  return out;
}

}  // namespace bk
