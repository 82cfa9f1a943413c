#include "bk/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bk {

void BKParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("lambda must be a positive real, got " + std::to_string(lambda));
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0,1], got " + std::to_string(alpha));
}

WedgeCloud::WedgeCloud(PointedFiniteMetric c_side, PointedFiniteMetric y_side, BKParams params,
                       bool include_basepoint)
    : c_(std::move(c_side)),
      y_(std::move(y_side)),
      params_(params),
      include_basepoint_(include_basepoint) {
  params_.validate();
  for (std::size_t i = 0; i < y_.size(); ++i)
    if (i != y_.basepoint() && !(y_.radius(i) > 0.0))
      throw std::invalid_argument("Y-side point " + y_.metric().label(i) +
                                  " has zero radius; non-CP points must be separated from *");

  for (std::size_t i = 0; i < c_.size(); ++i)
    if (i != c_.basepoint() || include_basepoint_) vertices_.push_back({Side::C, i});
  c_vertex_count_ = vertices_.size();
  for (std::size_t i = 0; i < y_.size(); ++i)
    if (i != y_.basepoint()) vertices_.push_back({Side::Y, i});
}

WedgePoint WedgeCloud::point(Side side, std::size_t index) const {
  const std::size_t n = side == Side::C ? c_.size() : y_.size();
  if (index >= n) throw std::out_of_range("wedge point index " + std::to_string(index) + " out of range");
  if (side == Side::Y && index == y_.basepoint()) return basepoint();
  return {side, index};
}

double WedgeCloud::radius(const WedgePoint& x) const {
  return x.side == Side::C ? c_.radius(x.index) : y_.radius(x.index);
}

std::string WedgeCloud::vertex_label(std::size_t v) const {
  const WedgePoint& x = vertices_.at(v);
  const FiniteMetric& m = x.side == Side::C ? c_.metric() : y_.metric();
  if (!m.labels().empty()) return m.labels()[x.index];
  return (x.side == Side::C ? "c" : "y") + std::to_string(x.index);
}

WedgeCloud WedgeCloud::with_anchor(std::size_t anchor) const {
  return WedgeCloud(PointedFiniteMetric(c_.metric(), anchor), y_, params_, include_basepoint_);
}

WedgeCloud WedgeCloud::with_scale(double lambda) const {
  BKParams p = params_;
  p.lambda = lambda;
  p.validate();
  FiniteMetric scaled = snowflake(y_.metric(), lambda / params_.lambda, 1.0);
  return WedgeCloud(c_, PointedFiniteMetric(std::move(scaled), y_.basepoint()), p, include_basepoint_);
}

WedgeCloud WedgeCloud::with_exponent(const LpExponent& p) const {
  BKParams q = params_;
  q.p = p;
  return WedgeCloud(c_, y_, q, include_basepoint_);
}

double wedge_distance(const WedgeCloud& cloud, const WedgePoint& a, const WedgePoint& b) {
  const WedgePoint x = cloud.point(a.side, a.index);
  const WedgePoint y = cloud.point(b.side, b.index);
  if (x.side == y.side) {
    const auto& m = x.side == Side::C ? cloud.c_side().metric() : cloud.y_side().metric();
    return m(x.index, y.index);
  }
  const WedgePoint& c = x.side == Side::C ? x : y;
  const WedgePoint& w = x.side == Side::C ? y : x;
  return lp_combine(cloud.radius(c), cloud.radius(w), cloud.params().p);
}

FiniteMetric full_distance_table(const WedgeCloud& cloud) {
  const auto& vs = cloud.vertices();
  DistanceTable t(vs.size(), std::vector<double>(vs.size(), 0.0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    labels.push_back(cloud.vertex_label(i));
    for (std::size_t j = 0; j < vs.size(); ++j) t[i][j] = wedge_distance(cloud, vs[i], vs[j]);
  }
  return FiniteMetric(t, std::move(labels));
}

std::vector<WedgePoint> all_points(const WedgeCloud& cloud) {
  std::vector<WedgePoint> pts;
  for (std::size_t i = 0; i < cloud.c_side().size(); ++i) pts.push_back({Side::C, i});
  for (std::size_t i = 0; i < cloud.y_side().size(); ++i)
    if (i != cloud.star()) pts.push_back({Side::Y, i});
  return pts;
}

namespace {

void require_same_points(const WedgeCloud& a, const WedgeCloud& b) {
  if (!(a.c_side().metric() == b.c_side().metric()) || !(a.y_side().metric() == b.y_side().metric()) ||
      a.star() != b.star() || a.params().lambda != b.params().lambda ||
      a.params().alpha != b.params().alpha || !(a.params().p == b.params().p))
    throw std::invalid_argument("clouds must share points and parameters and differ only in the anchor");
}

double max_pair_difference(const WedgeCloud& a, const WedgeCloud& b) {
  require_same_points(a, b);
  const auto pts = all_points(a);
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      worst = std::max(worst, std::abs(wedge_distance(a, pts[i], pts[j]) - wedge_distance(b, pts[i], pts[j])));
  return worst;
}

}  // namespace

double anchor_uniform_distance(const WedgeCloud& a, const WedgeCloud& b) { return max_pair_difference(a, b); }

DistortionBound gh_distortion_bound(const WedgeCloud& a, const WedgeCloud& b) {
  DistortionBound out;
  out.distortion = max_pair_difference(a, b);
  out.bound = a.c_side().metric()(a.anchor(), b.anchor());
  return out;
}

bool bilipschitz_check(const WedgeCloud& cloud, const LpExponent& p, const LpExponent& q,
                       double lambda_a, double lambda_b) {
  const WedgeCloud da = cloud.with_scale(lambda_a).with_exponent(p);
  const WedgeCloud db = cloud.with_scale(lambda_b).with_exponent(q);
  const double c = lp_equivalence_constant(p, q);
  const double ratio = lambda_b / lambda_a;
  const double lo = std::min(1.0, ratio) / c;
  const double hi = std::max(1.0, ratio) * c;
  const auto pts = all_points(cloud);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double x = wedge_distance(da, pts[i], pts[j]);
      const double y = wedge_distance(db, pts[i], pts[j]);
      const double slack = kMetricTol * std::max(1.0, x);
      if (y < lo * x - slack || y > hi * x + slack) return false;
    }
  return true;
}

}  // namespace bk
