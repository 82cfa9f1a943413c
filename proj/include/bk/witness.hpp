#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bk/metric.hpp"
#include "bk/models.hpp"

namespace bk {

enum class WitnessStatus {
  Feasible,      ///< margin below -tol
  Boundary,      ///< |margin| <= tol; counted as feasible (closed balls)
  Infeasible,    ///< margin above tol
  NonConverged,  ///< solver gave up; neither feasible nor infeasible
};

std::string to_string(WitnessStatus s);

/// Outcome of a closed-ball intersection query. The margin is
/// min over witnesses z of max_i (d(z, c_i) - r_i); a nonpositive margin means
/// the balls share a point.
struct WitnessResult {
  WitnessStatus status = WitnessStatus::Infeasible;
  double margin = 0.0;
  std::vector<double> witness;               ///< coordinates (ray / orthant)
  std::optional<std::size_t> witness_index;  ///< candidate index (finite set)

  bool feasible() const { return status == WitnessStatus::Feasible || status == WitnessStatus::Boundary; }
};

/// Heterogeneous-radius closed balls in a coordinate domain. Centers are
/// given in square-root coordinates, where the Bures geometry is Euclidean.
struct BallIntersectionQuery {
  std::vector<std::vector<double>> centers;
  std::vector<double> radii;

  /// Throws std::invalid_argument unless centers are nonempty, of equal
  /// dimension, and matched by nonnegative radii.
  void validate() const;
};

/// Exact interval logic on [0, inf) (one-dimensional centers).
WitnessResult ray_ball_intersection(const BallIntersectionQuery& query);

/// Solves min over z >= 0 of max_i (||z - p_i|| - r_i) with a log-barrier
/// interior-point method. Decisions with |margin| <= tol are Boundary.
WitnessResult orthant_ball_intersection(const BallIntersectionQuery& query, double tol = 1e-9);

/// Brute force over a candidate list: feasible iff some candidate w has
/// metric(w, c_i) <= r_i for all i.
WitnessResult finite_witness_intersection(std::span<const std::size_t> centers, std::span<const double> radii,
                                          std::span<const std::size_t> candidates,
                                          const std::function<double(std::size_t, std::size_t)>& metric);

/// Orthant solver tolerance, honoring the BK_SOLVER_TOL environment variable.
double default_solver_tolerance();

/// Decides closed-ball intersection feasibility among an indexed set of
/// points of an ambient domain.
class WitnessOracle {
 public:
  enum class Kind { FiniteSet, Ray, Orthant };

  virtual ~WitnessOracle() = default;

  virtual Kind kind() const = 0;
  /// Number of indexed points.
  virtual std::size_t size() const = 0;
  /// Ambient distance between indexed points.
  virtual double distance(std::size_t i, std::size_t j) const = 0;
  virtual WitnessResult intersect(std::span<const std::size_t> centers, std::span<const double> radii) const = 0;
};

std::string to_string(WitnessOracle::Kind k);

/// Witnesses restricted to a finite candidate list (by default every point).
class FiniteSetOracle final : public WitnessOracle {
 public:
  explicit FiniteSetOracle(FiniteMetric domain, std::vector<std::size_t> candidates = {});

  Kind kind() const override { return Kind::FiniteSet; }
  std::size_t size() const override { return domain_.size(); }
  double distance(std::size_t i, std::size_t j) const override { return domain_(i, j); }
  WitnessResult intersect(std::span<const std::size_t> centers, std::span<const double> radii) const override;

  const std::vector<std::size_t>& candidates() const { return candidates_; }

 private:
  FiniteMetric domain_;
  std::vector<std::size_t> candidates_;
};

/// Witnesses anywhere on the depolarizing ray (points given by c >= 0).
class RayOracle final : public WitnessOracle {
 public:
  explicit RayOracle(std::vector<double> cs);

  Kind kind() const override { return Kind::Ray; }
  std::size_t size() const override { return coord_.size(); }
  double distance(std::size_t i, std::size_t j) const override;
  WitnessResult intersect(std::span<const std::size_t> centers, std::span<const double> radii) const override;

 private:
  std::vector<double> coord_;  // sqrt(c)
};

/// Witnesses anywhere in the Hellinger orthant [0, inf)^n.
class OrthantOracle final : public WitnessOracle {
 public:
  explicit OrthantOracle(const std::vector<HellingerPoint>& points, double tol = default_solver_tolerance());

  Kind kind() const override { return Kind::Orthant; }
  std::size_t size() const override { return coord_.size(); }
  double distance(std::size_t i, std::size_t j) const override;
  WitnessResult intersect(std::span<const std::size_t> centers, std::span<const double> radii) const override;

  double tolerance() const { return tol_; }

 private:
  std::vector<std::vector<double>> coord_;  // sqrt coordinates
  double tol_;
};

/// Raised when an oracle cannot decide a query.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<int> simplex)
      : std::runtime_error(what), simplex_(std::move(simplex)) {}
  const std::vector<int>& simplex() const { return simplex_; }

 private:
  std::vector<int> simplex_;
};

}  // namespace bk
