#pragma once

#include <cstddef>
#include <vector>

#include "bk/lp.hpp"
#include "bk/metric.hpp"

namespace bk {

/// Parameters of the BK family: scale lambda > 0, snowflake exponent
/// alpha in (0,1], and glue exponent p.
struct BKParams {
  double lambda = 1.0;
  double alpha = 1.0;
  LpExponent p = LpExponent::inf();

  /// Throws std::invalid_argument when out of domain.
  void validate() const;
};

enum class Side { C, Y };

/// A point of the wedge. Constructed through WedgeCloud::point so that the
/// Y-side basepoint is canonicalized to the C-side anchor; plain equality
/// then identifies the two glued basepoints.
struct WedgePoint {
  Side side = Side::C;
  std::size_t index = 0;

  friend bool operator==(const WedgePoint&, const WedgePoint&) = default;
};

/// A mixed cloud: a CP component pointed at the anchor and a collapsed
/// non-CP component pointed at *. Y-side distances are stored after the
/// snowflake transform, i.e. they already equal lambda * delta_reg^alpha.
///
/// The cloud's vertex list (used by every complex built on it) is: the C-side
/// points in index order, skipping the anchor unless `include_basepoint` is
/// set, followed by the non-basepoint Y-side points in index order.
class WedgeCloud {
 public:
  WedgeCloud(PointedFiniteMetric c_side, PointedFiniteMetric y_side, BKParams params,
             bool include_basepoint = true);

  const PointedFiniteMetric& c_side() const { return c_; }
  const PointedFiniteMetric& y_side() const { return y_; }
  const BKParams& params() const { return params_; }
  bool include_basepoint() const { return include_basepoint_; }

  std::size_t anchor() const { return c_.basepoint(); }
  std::size_t star() const { return y_.basepoint(); }

  /// Canonical point handle; throws std::out_of_range on a bad index.
  WedgePoint point(Side side, std::size_t index) const;
  WedgePoint basepoint() const { return {Side::C, anchor()}; }

  /// r_C for C points, r_Y for Y points.
  double radius(const WedgePoint& x) const;

  const std::vector<WedgePoint>& vertices() const { return vertices_; }
  /// Number of leading vertices that lie on the C side.
  std::size_t c_vertex_count() const { return c_vertex_count_; }
  std::string vertex_label(std::size_t v) const;

  /// Same points and parameters, anchored at another C-side point.
  WedgeCloud with_anchor(std::size_t anchor) const;
  /// Same points with Y distances rescaled to another lambda.
  WedgeCloud with_scale(double lambda) const;
  WedgeCloud with_exponent(const LpExponent& p) const;

 private:
  PointedFiniteMetric c_;
  PointedFiniteMetric y_;
  BKParams params_;
  bool include_basepoint_;
  std::vector<WedgePoint> vertices_;
  std::size_t c_vertex_count_ = 0;
};

/// Distance in the l^p wedge: component distance on the same side, otherwise
/// ||(r_C(x), r_Y(y))||_p.
double wedge_distance(const WedgeCloud& cloud, const WedgePoint& x, const WedgePoint& y);

/// Distances among the cloud's vertices; validated as a metric, so a
/// successful return certifies the wedge metric axioms on this cloud.
FiniteMetric full_distance_table(const WedgeCloud& cloud);

/// Every point of the two components with the basepoints merged: all C-side
/// points followed by the non-basepoint Y points. Used for anchor comparisons.
std::vector<WedgePoint> all_points(const WedgeCloud& cloud);

/// Largest |d_A - d_B| over all point pairs for two clouds that differ only in
/// the anchor. Throws std::invalid_argument for mismatched clouds.
double anchor_uniform_distance(const WedgeCloud& a, const WedgeCloud& b);

struct DistortionBound {
  double distortion = 0.0;  ///< distortion of the diagonal correspondence
  double bound = 0.0;       ///< beta(theta_A, theta_B)
  bool holds() const { return distortion <= bound + kMetricTol; }
};

DistortionBound gh_distortion_bound(const WedgeCloud& a, const WedgeCloud& b);

/// Checks the two-sided comparison between the (p, lambda_a) and
/// (q, lambda_b) members of the family on every pair of points of `cloud`.
/// The cloud's stored Y distances are taken to be at its own lambda.
bool bilipschitz_check(const WedgeCloud& cloud, const LpExponent& p, const LpExponent& q,
                       double lambda_a, double lambda_b);

}  // namespace bk
