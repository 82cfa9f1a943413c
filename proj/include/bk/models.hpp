#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bk/metric.hpp"
#include "bk/wedge.hpp"

namespace bk {

/// A CP functional on C^n, identified with its nonnegative coefficient vector.
struct HellingerPoint {
  std::vector<double> coords;

  /// Throws std::invalid_argument on a negative or non-finite coordinate.
  void validate() const;
};

/// The map c * Theta on the depolarizing ray.
struct RayPoint {
  double c = 0.0;
};

/// Multiplication by a complex scalar z on C. CP exactly when z is real and
/// nonnegative; the test is exact on the stored (re, im) pair.
class ScalarCB {
 public:
  explicit ScalarCB(std::complex<double> z) : z_(z) {}

  std::complex<double> z() const { return z_; }
  double cb_norm() const { return std::abs(z_); }
  bool is_cp() const { return z_.imag() == 0.0 && z_.real() >= 0.0; }

 private:
  std::complex<double> z_;
};

/// |sqrt(c1) - sqrt(c2)|, the Bures distance between phi_{c1} and phi_{c2}.
double bures_scalar(double c1, double c2);

/// |sqrt(c) - sqrt(d)|, the Bures distance along the depolarizing ray.
double bures_ray(double c, double d);

/// Euclidean norm of the coordinatewise square-root difference.
double hellinger(const HellingerPoint& z, const HellingerPoint& w);

FiniteMetric ray_metric(const std::vector<double>& cs, std::vector<std::string> labels = {});
FiniteMetric hellinger_metric(const std::vector<HellingerPoint>& pts, std::vector<std::string> labels = {});

/// Comparison between the Bures distance and the cb-norm:
/// cb_diff / (sqrt(cb_a) + sqrt(cb_b)) <= beta <= sqrt(cb_diff).
/// The lower bound is skipped when both norms vanish.
struct KswResult {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_checked = true;
  bool holds = false;
};

KswResult ksw_bounds(double beta, double cb_diff, double cb_a, double cb_b, double tol = 1e-12);
bool ksw_check(double beta, double cb_diff, double cb_a, double cb_b);

/// A collapsed non-CP component given by its post-snowflake distances, with
/// optional cb-norms of the underlying maps (entry at * is ignored).
struct RadiusBoundViolation {
  std::size_t point = 0;
  double radius = 0.0;
  double bound = 0.0;

  std::string describe(const std::string& label) const;
};

class SyntheticYSpace {
 public:
  /// Throws std::invalid_argument if any radius exceeds lambda * cbNorm^{alpha/2}.
  SyntheticYSpace(PointedFiniteMetric metric, std::vector<double> cb_norms, const BKParams& params);

  const PointedFiniteMetric& metric() const { return metric_; }
  const std::vector<double>& cb_norms() const { return cb_norms_; }

  /// Lists every point whose radius exceeds its cb-norm bound.
  static std::vector<RadiusBoundViolation> check(const PointedFiniteMetric& metric,
                                                 const std::vector<double>& cb_norms,
                                                 const BKParams& params);

 private:
  PointedFiniteMetric metric_;
  std::vector<double> cb_norms_;
};

/// Largest radius compatible with the cb-norm bound, lambda * cb^{alpha/2}.
double max_synthetic_radius(double cb_norm, const BKParams& params);

/// Sequences of the scalar model behind the anchor and topology
/// counterexamples, evaluated at n = 1..n_max. The shrinking family is
/// psi_n = i/n and the perturbed family is phi + i/n; radii are taken at the
/// largest value the cb-norm bound allows.
struct ScalarScenarioConfig {
  double anchor_c = 1.0;     ///< theta = phi_{anchor_c}
  double alt_anchor_c = 4.0; ///< theta'
  double phi_c = 4.0;        ///< phi != theta
  int n_max = 64;
  BKParams params{};
};

struct ScalarScenarioRow {
  int n = 0;
  double psi_radius = 0.0;      ///< r_Y(i/n)
  double d_anchor_psi = 0.0;    ///< d_theta(theta, psi_n) -> 0
  double d_alt_anchor = 0.0;    ///< d_theta'(theta, psi_n) >= beta(theta, theta')
  double anchor_gap = 0.0;      ///< d_theta' - d_theta at (theta, psi_n) -> beta(theta, theta')
  double cb_dist_phi = 0.0;     ///< ||phi - (phi + i/n)||_cb = 1/n
  double d_phi_perturbed = 0.0; ///< d_theta(phi, phi + i/n) >= beta(phi, theta)
};

struct ScalarScenarioReport {
  ScalarScenarioConfig config;
  double beta_anchors = 0.0;    ///< beta(theta, theta')
  double beta_phi_anchor = 0.0; ///< beta(phi, theta)
  std::vector<ScalarScenarioRow> rows;

  /// Radii and d_theta(theta, psi_n) decrease, the alt-anchor distance and the
  /// perturbed distance stay above their Bures lower bounds.
  bool consistent() const;
};

ScalarScenarioReport scalar_counterexample_scenario(const ScalarScenarioConfig& config);

}  // namespace bk
