#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

/// Which metric axiom a distance table breaks.
enum class Axiom { Shape, Finite, Diagonal, Symmetry, Separation, Triangle };

std::string to_string(Axiom axiom);

/// First violation found by `find_violation`. For triangle violations
/// d(i,k) > d(i,j) + d(j,k); for pair axioms only (i, j) are meaningful.
struct MetricViolation {
  Axiom axiom;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double excess = 0.0;

  std::string describe() const;
};

class MetricError : public std::invalid_argument {
 public:
  explicit MetricError(const MetricViolation& v)
      : std::invalid_argument(v.describe()), violation_(v) {}

  const MetricViolation& violation() const { return violation_; }

 private:
  MetricViolation violation_;
};

using DistanceTable = std::vector<std::vector<double>>;

/// Checks symmetry, zero diagonal, separation and the triangle inequality to
/// additive tolerance `tol`.
std::optional<MetricViolation> find_violation(const DistanceTable& table, double tol = 1e-12);

/// A finite point set with a validated distance table. Immutable.
class FiniteMetric {
 public:
  FiniteMetric() = default;

  /// Throws MetricError when the table is not a metric.
  explicit FiniteMetric(const DistanceTable& table, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of point i, or its index when unlabeled.
  std::string label(std::size_t i) const;

  DistanceTable table() const;
  FiniteMetric restrict_to(std::span<const std::size_t> points) const;

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
  std::vector<std::string> labels_;
};

/// A finite metric with a distinguished basepoint.
class PointedFiniteMetric {
 public:
  PointedFiniteMetric() = default;
  PointedFiniteMetric(FiniteMetric metric, std::size_t basepoint);

  const FiniteMetric& metric() const { return metric_; }
  std::size_t basepoint() const { return basepoint_; }
  std::size_t size() const { return metric_.size(); }

  /// Distance from point i to the basepoint.
  double radius(std::size_t i) const { return metric_(i, basepoint_); }

 private:
  FiniteMetric metric_;
  std::size_t basepoint_ = 0;
};

/// Entrywise d -> lambda * d^alpha. The result is re-validated.
FiniteMetric snowflake(const FiniteMetric& d, double lambda, double alpha);

}  // namespace bk
