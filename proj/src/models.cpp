#include "bk/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bk {

namespace {

void require_nonnegative(double c, const char* what) {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument(std::string(what) + ": coordinate must be a finite nonnegative real");
}

}  // namespace

void HellingerPoint::validate() const {
  for (double c : coords) require_nonnegative(c, "HellingerPoint");
}

double bures_scalar(double c1, double c2) {
  require_nonnegative(c1, "bures_scalar");
  require_nonnegative(c2, "bures_scalar");
  return std::abs(std::sqrt(c1) - std::sqrt(c2));
}

double bures_ray(double c, double d) {
  require_nonnegative(c, "bures_ray");
  require_nonnegative(d, "bures_ray");
  return std::abs(std::sqrt(c) - std::sqrt(d));
}

double hellinger(const HellingerPoint& z, const HellingerPoint& w) {
  if (z.coords.size() != w.coords.size())
    throw std::invalid_argument("hellinger: dimension mismatch (" + std::to_string(z.coords.size()) +
                                " vs " + std::to_string(w.coords.size()) + ")");
  z.validate();
  w.validate();
  double s = 0.0;
  for (std::size_t k = 0; k < z.coords.size(); ++k) {
    const double d = std::sqrt(z.coords[k]) - std::sqrt(w.coords[k]);
    s += d * d;
  }
  return std::sqrt(s);
}

FiniteMetric ray_metric(const std::vector<double>& cs, std::vector<std::string> labels) {
  DistanceTable t(cs.size(), std::vector<double>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) t[i][j] = bures_ray(cs[i], cs[j]);
  return FiniteMetric(t, std::move(labels));
}

FiniteMetric hellinger_metric(const std::vector<HellingerPoint>& pts, std::vector<std::string> labels) {
  DistanceTable t(pts.size(), std::vector<double>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) t[i][j] = hellinger(pts[i], pts[j]);
  return FiniteMetric(t, std::move(labels));
}

KswResult ksw_bounds(double beta, double cb_diff, double cb_a, double cb_b, double tol) {
  if (beta < 0.0 || cb_diff < 0.0 || cb_a < 0.0 || cb_b < 0.0)
    throw std::invalid_argument("ksw_check: inputs must be nonnegative");
  KswResult r;
  r.upper = std::sqrt(cb_diff);
  const double denom = std::sqrt(cb_a) + std::sqrt(cb_b);
  r.lower_checked = denom > 0.0;
  r.lower = r.lower_checked ? cb_diff / denom : 0.0;
  r.holds = (!r.lower_checked || r.lower <= beta + tol) && beta <= r.upper + tol;
  return r;
}

bool ksw_check(double beta, double cb_diff, double cb_a, double cb_b) {
  return ksw_bounds(beta, cb_diff, cb_a, cb_b).holds;
}

std::string RadiusBoundViolation::describe(const std::string& label) const {
  std::ostringstream os;
  os.precision(12);
  os << "radius of " << label << " is " << radius << ", above the cb-norm bound lambda*cbNorm^(alpha/2) = "
     << bound;
  return os.str();
}

double max_synthetic_radius(double cb_norm, const BKParams& params) {
  require_nonnegative(cb_norm, "cb norm");
  return params.lambda * std::pow(cb_norm, params.alpha / 2.0);
}

std::vector<RadiusBoundViolation> SyntheticYSpace::check(const PointedFiniteMetric& metric,
                                                         const std::vector<double>& cb_norms,
                                                         const BKParams& params) {
  std::vector<RadiusBoundViolation> out;
  if (cb_norms.empty()) return out;
  if (cb_norms.size() != metric.size())
    throw std::invalid_argument("cbNorms has " + std::to_string(cb_norms.size()) + " entries for " +
                                std::to_string(metric.size()) + " Y-side points");
  for (std::size_t i = 0; i < metric.size(); ++i) {
    if (i == metric.basepoint()) continue;
    const double bound = max_synthetic_radius(cb_norms[i], params);
    if (metric.radius(i) > bound + kMetricTol) out.push_back({i, metric.radius(i), bound});
  }
  return out;
}

SyntheticYSpace::SyntheticYSpace(PointedFiniteMetric metric, std::vector<double> cb_norms,
                                 const BKParams& params)
    : metric_(std::move(metric)), cb_norms_(std::move(cb_norms)) {
  params.validate();
  const auto bad = check(metric_, cb_norms_, params);
  if (!bad.empty()) throw std::invalid_argument(bad.front().describe(metric_.metric().label(bad.front().point)));
}

ScalarScenarioReport scalar_counterexample_scenario(const ScalarScenarioConfig& cfg) {
  cfg.params.validate();
  if (cfg.n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  ScalarScenarioReport rep;
  rep.config = cfg;
  rep.beta_anchors = bures_scalar(cfg.anchor_c, cfg.alt_anchor_c);
  rep.beta_phi_anchor = bures_scalar(cfg.phi_c, cfg.anchor_c);
  const LpExponent& p = cfg.params.p;
  for (int n = 1; n <= cfg.n_max; ++n) {
    ScalarScenarioRow row;
    row.n = n;
    const ScalarCB psi(std::complex<double>(0.0, 1.0 / n));
    const ScalarCB perturbed(std::complex<double>(cfg.phi_c, 1.0 / n));
    row.psi_radius = max_synthetic_radius(psi.cb_norm(), cfg.params);
    // Non-CP points see the C side only through the anchor, so cross
    // distances are l^p combinations of the two radii.
    row.d_anchor_psi = lp_combine(0.0, row.psi_radius, p);
    row.d_alt_anchor = lp_combine(rep.beta_anchors, row.psi_radius, p);
    row.anchor_gap = row.d_alt_anchor - row.d_anchor_psi;
    row.cb_dist_phi = std::abs(perturbed.z() - std::complex<double>(cfg.phi_c, 0.0));
    row.d_phi_perturbed = lp_combine(rep.beta_phi_anchor, max_synthetic_radius(perturbed.cb_norm(), cfg.params), p);
    rep.rows.push_back(row);
  }
  return rep;
}

bool ScalarScenarioReport::consistent() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.d_alt_anchor < beta_anchors - kMetricTol) return false;
    if (r.d_phi_perturbed < beta_phi_anchor - kMetricTol) return false;
    if (r.anchor_gap > beta_anchors + kMetricTol) return false;
    if (i > 0 && (r.psi_radius > rows[i - 1].psi_radius || r.d_anchor_psi > rows[i - 1].d_anchor_psi))
      return false;
  }
  return true;
}

}  // namespace bk
