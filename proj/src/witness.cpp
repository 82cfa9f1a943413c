#include "bk/witness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "bk/lp.hpp"

namespace bk {

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Feasible: return "feasible";
    case WitnessStatus::Boundary: return "boundary";
    case WitnessStatus::Infeasible: return "infeasible";
    case WitnessStatus::NonConverged: return "non-converged";
  }
  return "unknown";
}

std::string to_string(WitnessOracle::Kind k) {
  switch (k) {
    case WitnessOracle::Kind::FiniteSet: return "finite-set";
    case WitnessOracle::Kind::Ray: return "ray";
    case WitnessOracle::Kind::Orthant: return "orthant";
  }
  return "unknown";
}

void BallIntersectionQuery::validate() const {
  if (centers.empty()) throw std::invalid_argument("ball query needs at least one center");
  if (radii.size() != centers.size()) throw std::invalid_argument("ball query: one radius per center required");
  const std::size_t dim = centers.front().size();
  if (dim == 0) throw std::invalid_argument("ball query: zero-dimensional centers");
  for (const auto& c : centers)
    if (c.size() != dim) throw std::invalid_argument("ball query: centers of mixed dimension");
  for (double r : radii)
    if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("ball query: radii must be finite and nonnegative");
}

namespace {

WitnessStatus classify(double margin, double tol) {
  if (margin < -tol) return WitnessStatus::Feasible;
  if (margin <= tol) return WitnessStatus::Boundary;
  return WitnessStatus::Infeasible;
}

double max_excess(const Eigen::VectorXd& z, const std::vector<Eigen::VectorXd>& p, const std::vector<double>& r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, (z - p[i]).norm() - r[i]);
  return worst;
}

// Barrier for  min v  s.t.  ||z - p_i|| <= r_i + v,  z >= 0.
// Each cone constraint contributes -log((r_i + v)^2 - ||z - p_i||^2).
class BarrierProblem {
 public:
  BarrierProblem(std::vector<Eigen::VectorXd> p, std::vector<double> r)
      : p_(std::move(p)), r_(std::move(r)), n_(p_.front().size()) {}

  int n() const { return static_cast<int>(n_); }
  std::size_t m() const { return p_.size(); }
  const std::vector<Eigen::VectorXd>& centers() const { return p_; }
  const std::vector<double>& radii() const { return r_; }

  bool interior(const Eigen::VectorXd& x) const {
    const auto z = x.head(n_);
    const double v = x[n_];
    if ((z.array() <= 0.0).any()) return false;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const double s = r_[i] + v;
      if (s <= 0.0 || s * s - (z - p_[i]).squaredNorm() <= 0.0) return false;
    }
    return true;
  }

  double value(const Eigen::VectorXd& x, double t) const {
    const auto z = x.head(n_);
    const double v = x[n_];
    double f = t * v - z.array().log().sum();
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const double s = r_[i] + v;
      f -= std::log(s * s - (z - p_[i]).squaredNorm());
    }
    return f;
  }

  void derivatives(const Eigen::VectorXd& x, double t, Eigen::VectorXd& g, Eigen::MatrixXd& h) const {
    const Eigen::Index dim = static_cast<Eigen::Index>(n_) + 1;
    const auto z = x.head(n_);
    const double v = x[n_];
    g = Eigen::VectorXd::Zero(dim);
    h = Eigen::MatrixXd::Zero(dim, dim);
    g[n_] = t;
    for (std::size_t k = 0; k < n_; ++k) {
      g[k] -= 1.0 / z[k];
      h(k, k) += 1.0 / (z[k] * z[k]);
    }
    Eigen::VectorXd gw(dim);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const Eigen::VectorXd u = z - p_[i];
      const double s = r_[i] + v;
      const double w = s * s - u.squaredNorm();
      gw.head(n_) = -2.0 * u;
      gw[n_] = 2.0 * s;
      g -= gw / w;
      h += gw * gw.transpose() / (w * w);
      for (std::size_t k = 0; k < n_; ++k) h(k, k) += 2.0 / w;
      h(n_, n_) -= 2.0 / w;
    }
  }

 private:
  std::vector<Eigen::VectorXd> p_;
  std::vector<double> r_;
  std::size_t n_;
};

}  // namespace

WitnessResult ray_ball_intersection(const BallIntersectionQuery& q) {
  q.validate();
  if (q.centers.front().size() != 1) throw std::invalid_argument("ray query: centers must be one-dimensional");
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.centers.size(); ++i) {
    lo = std::max(lo, q.centers[i][0] - q.radii[i]);
    hi = std::min(hi, q.centers[i][0] + q.radii[i]);
  }
  const double z = std::max(0.0, 0.5 * (lo + hi));
  WitnessResult out;
  out.margin = std::max(z - hi, lo - z);
  out.witness = {z};
  out.status = classify(out.margin, kMetricTol);
  return out;
}

WitnessResult orthant_ball_intersection(const BallIntersectionQuery& q, double tol) {
  q.validate();
  const std::size_t n = q.centers.front().size();
  std::vector<Eigen::VectorXd> p;
  for (const auto& c : q.centers) {
    for (double x : c)
      if (x < 0.0) throw std::invalid_argument("orthant query: centers must lie in the nonnegative orthant");
    p.push_back(Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(n)));
  }
  BarrierProblem prob(p, q.radii);

  double scale = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) scale = std::max({scale, p[i].lpNorm<Eigen::Infinity>(), q.radii[i]});

  Eigen::VectorXd x(static_cast<Eigen::Index>(n) + 1);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (const auto& c : p) mean += c;
  x.head(n) = mean / static_cast<double>(p.size()) + Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 0.5 * scale);
  x[n] = max_excess(x.head(n), p, q.radii) + scale;

  const double barrier_degree = 2.0 * static_cast<double>(p.size()) + static_cast<double>(n);
  const double gap_target = 1e-13 * scale;
  constexpr int kNewtonCap = 5000;
  int newton_steps = 0;
  bool converged = false;

  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  for (double t = 1.0 / scale;; t *= 8.0) {
    for (;;) {
      prob.derivatives(x, t, g, h);
      const Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
      const Eigen::VectorXd step = ldlt.solve(-g);
      if (!step.allFinite()) {
        newton_steps = kNewtonCap + 1;
        break;
      }
      const double decrement = -g.dot(step);
      if (decrement / 2.0 <= 1e-10 || ++newton_steps > kNewtonCap) break;
      // Steps at the size of the coordinates' last bits only shuffle roundoff.
      if (step.norm() <= 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + x.norm())) break;
      double s = 1.0;
      const double f0 = prob.value(x, t);
      while (s > 1e-16 && (!prob.interior(x + s * step) || prob.value(x + s * step, t) > f0 - 0.25 * s * decrement))
        s *= 0.5;
      const Eigen::VectorXd next = x + s * step;
      if (s <= 1e-16 || next == x) break;  // stalled at roundoff; accept the current center
      x = next;
    }
    if (newton_steps > kNewtonCap) break;
    if (barrier_degree / t < gap_target) {
      converged = true;
      break;
    }
  }

  WitnessResult out;
  const Eigen::VectorXd z = x.head(n);
  out.witness.assign(z.data(), z.data() + n);
  out.margin = max_excess(z, p, q.radii);
  if (!converged || !std::isfinite(out.margin)) {
    out.status = WitnessStatus::NonConverged;
    return out;
  }
  out.status = classify(out.margin, tol);
  return out;
}

WitnessResult finite_witness_intersection(std::span<const std::size_t> centers, std::span<const double> radii,
                                          std::span<const std::size_t> candidates,
                                          const std::function<double(std::size_t, std::size_t)>& metric) {
  if (centers.empty() || centers.size() != radii.size())
    throw std::invalid_argument("finite witness query: need matching nonempty centers and radii");
  if (candidates.empty()) throw std::invalid_argument("finite witness query: empty candidate set");
  WitnessResult out;
  out.margin = std::numeric_limits<double>::infinity();
  for (std::size_t w : candidates) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centers.size(); ++i) worst = std::max(worst, metric(w, centers[i]) - radii[i]);
    if (worst < out.margin) {
      out.margin = worst;
      out.witness_index = w;
    }
  }
  out.status = classify(out.margin, kMetricTol);
  return out;
}

double default_solver_tolerance() {
  if (const char* env = std::getenv("BK_SOLVER_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

FiniteSetOracle::FiniteSetOracle(FiniteMetric domain, std::vector<std::size_t> candidates)
    : domain_(std::move(domain)), candidates_(std::move(candidates)) {
  if (candidates_.empty()) {
    candidates_.resize(domain_.size());
    std::iota(candidates_.begin(), candidates_.end(), std::size_t{0});
  }
  for (std::size_t c : candidates_)
    if (c >= domain_.size()) throw std::out_of_range("witness candidate index out of range");
}

WitnessResult FiniteSetOracle::intersect(std::span<const std::size_t> centers, std::span<const double> radii) const {
  return finite_witness_intersection(centers, radii, candidates_,
                                     [this](std::size_t a, std::size_t b) { return domain_(a, b); });
}

RayOracle::RayOracle(std::vector<double> cs) {
  for (double c : cs) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("ray points need c >= 0");
    coord_.push_back(std::sqrt(c));
  }
}

double RayOracle::distance(std::size_t i, std::size_t j) const { return std::abs(coord_.at(i) - coord_.at(j)); }

WitnessResult RayOracle::intersect(std::span<const std::size_t> centers, std::span<const double> radii) const {
  BallIntersectionQuery q;
  for (std::size_t c : centers) q.centers.push_back({coord_.at(c)});
  q.radii.assign(radii.begin(), radii.end());
  return ray_ball_intersection(q);
}

OrthantOracle::OrthantOracle(const std::vector<HellingerPoint>& points, double tol) : tol_(tol) {
  for (const auto& pt : points) {
    pt.validate();
    if (!coord_.empty() && pt.coords.size() != coord_.front().size())
      throw std::invalid_argument("orthant points of mixed dimension");
    std::vector<double> s;
    for (double c : pt.coords) s.push_back(std::sqrt(c));
    coord_.push_back(std::move(s));
  }
}

double OrthantOracle::distance(std::size_t i, std::size_t j) const {
  double s = 0.0;
  for (std::size_t k = 0; k < coord_.at(i).size(); ++k) {
    const double d = coord_[i][k] - coord_.at(j)[k];
    s += d * d;
  }
  return std::sqrt(s);
}

WitnessResult OrthantOracle::intersect(std::span<const std::size_t> centers, std::span<const double> radii) const {
  BallIntersectionQuery q;
  for (std::size_t c : centers) q.centers.push_back(coord_.at(c));
  q.radii.assign(radii.begin(), radii.end());
  return orthant_ball_intersection(q, tol_);
}

}  // namespace bk
