#include "bk/metric.hpp"

#include <cmath>
#include <sstream>

namespace bk {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Shape: return "shape";
    case Axiom::Finite: return "finite";
    case Axiom::Diagonal: return "diagonal";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Separation: return "separation";
    case Axiom::Triangle: return "triangle";
  }
  return "unknown";
}

std::string MetricViolation::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (axiom) {
    case Axiom::Shape: os << "distance table is not square (row " << i << ")"; break;
    case Axiom::Finite: os << "entry (" << i << "," << j << ") is negative or not finite"; break;
    case Axiom::Diagonal: os << "diagonal entry (" << i << "," << i << ") is nonzero"; break;
    case Axiom::Symmetry:
      os << "asymmetric pair (" << i << "," << j << "), difference " << excess;
      break;
    case Axiom::Separation: os << "distinct points " << i << " and " << j << " at distance 0"; break;
    case Axiom::Triangle:
      os << "triangle inequality fails for (i,j,k) = (" << i << "," << j << "," << k
         << "): d(i,k) exceeds d(i,j) + d(j,k) by " << excess;
      break;
  }
  return os.str();
}

std::optional<MetricViolation> find_violation(const DistanceTable& table, double tol) {
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    if (table[i].size() != n) return MetricViolation{Axiom::Shape, i};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = table[i][j];
      if (!std::isfinite(d) || d < 0.0) return MetricViolation{Axiom::Finite, i, j};
    }
    if (table[i][i] != 0.0) return MetricViolation{Axiom::Diagonal, i, i};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = std::abs(table[i][j] - table[j][i]);
      if (diff > tol) return MetricViolation{Axiom::Symmetry, i, j, 0, diff};
      if (table[i][j] <= 0.0) return MetricViolation{Axiom::Separation, i, j};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double excess = table[i][k] - (table[i][j] + table[j][k]);
        if (excess > tol) return MetricViolation{Axiom::Triangle, i, j, k, excess};
      }
  return std::nullopt;
}

FiniteMetric::FiniteMetric(const DistanceTable& table, std::vector<std::string> labels)
    : n_(table.size()), labels_(std::move(labels)) {
  if (auto v = find_violation(table)) throw MetricError(*v);
  if (!labels_.empty() && labels_.size() != n_)
    throw std::invalid_argument("label count " + std::to_string(labels_.size()) +
                                " does not match point count " + std::to_string(n_));
  d_.resize(n_ * n_);
  // Symmetrize within tolerance so that d(i,j) and d(j,i) are bitwise equal.
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) d_[i * n_ + j] = i <= j ? table[i][j] : table[j][i];
}

std::string FiniteMetric::label(std::size_t i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

DistanceTable FiniteMetric::table() const {
  DistanceTable t(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = (*this)(i, j);
  return t;
}

FiniteMetric FiniteMetric::restrict_to(std::span<const std::size_t> points) const {
  DistanceTable t(points.size(), std::vector<double>(points.size()));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a] >= n_) throw std::out_of_range("restrict_to: index out of range");
    for (std::size_t b = 0; b < points.size(); ++b) t[a][b] = (*this)(points[a], points[b]);
    if (!labels_.empty()) names.push_back(labels_[points[a]]);
  }
  return FiniteMetric(t, std::move(names));
}

PointedFiniteMetric::PointedFiniteMetric(FiniteMetric metric, std::size_t basepoint)
    : metric_(std::move(metric)), basepoint_(basepoint) {
  if (basepoint_ >= metric_.size())
    throw std::invalid_argument("basepoint " + std::to_string(basepoint_) +
                                " out of range for a space of " +
                                std::to_string(metric_.size()) + " points");
}

FiniteMetric snowflake(const FiniteMetric& d, double lambda, double alpha) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("snowflake: lambda must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("snowflake: alpha must lie in (0,1]");
  DistanceTable t = d.table();
  for (auto& row : t)
    for (double& x : row) x = alpha == 1.0 ? lambda * x : lambda * std::pow(x, alpha);
  return FiniteMetric(t, d.labels());
}

}  // namespace bk
