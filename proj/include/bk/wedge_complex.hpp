#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bk/simplex.hpp"
#include "bk/wedge.hpp"
#include "bk/witness.hpp"

namespace bk {

/// Distances to the anchor (C side) and to * (Y side), indexed by component
/// point index.
struct RadialProfile {
  std::vector<double> r_c;
  std::vector<double> r_y;

  static RadialProfile of(const WedgeCloud& cloud);
};

/// Verdict on sigma u tau for sigma on the C side and tau on the Y side
/// (component indices), with the radial maxima that decide it.
struct MixedSimplexCertificate {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> tau;
  double a = 0.0;  ///< max r_C over sigma
  double b = 0.0;  ///< max r_Y over tau
  bool verdict = false;
  std::optional<Side> witness_side;  ///< Cech only: which component held a witness
  WitnessResult witness;             ///< Cech only: the successful (or last) query
};

/// Rips criterion: sigma and tau are Rips simplices of their components and
/// ||(a, b)||_p <= t. Throws std::invalid_argument on empty sigma or tau.
MixedSimplexCertificate mixed_rips_criterion(const WedgeCloud& cloud, std::span<const std::size_t> sigma,
                                             std::span<const std::size_t> tau, double t);

/// Rips complex of the cloud assembled from the two component Rips complexes
/// and the radially constrained join term; vertex ids follow cloud.vertices().
SimplicialComplex rips_wedge(const WedgeCloud& cloud, double t, int max_dim);

/// Per-component ambient witness oracles, indexed by component point index
/// (so the anchor and * are always part of the witness domain).
struct WedgeOracles {
  std::shared_ptr<const WitnessOracle> c_side;
  std::shared_ptr<const WitnessOracle> y_side;
};

/// Finite-set oracles over all points of each component.
WedgeOracles default_oracles(const WedgeCloud& cloud);

/// Cech criterion for a mixed simplex: a witness on the C side inside every
/// ball around sigma and inside the ball of radius (t^p - b^p)^{1/p} around
/// the anchor, or the symmetric condition on the Y side. Throws SolverError
/// when an oracle does not converge.
MixedSimplexCertificate cech_mixed_criterion(const WedgeCloud& cloud, std::span<const std::size_t> sigma,
                                             std::span<const std::size_t> tau, double t,
                                             const WedgeOracles& oracles);

/// Ambient Cech complex of the cloud inside the whole wedge.
SimplicialComplex cech_wedge_ambient(const WedgeCloud& cloud, double t, int max_dim, const WedgeOracles& oracles);

struct AuditReport {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  bool ok() const { return failures.empty(); }
};

/// For each scale: decomposed Rips equals brute-force Rips on the merged
/// table, the sandwich VR_t <= C_t <= VR_2t holds (intrinsic and ambient),
/// and the cross-edge set is exactly {(x, y): ||(r_C(x), r_Y(y))||_p <= t}.
/// Throws std::invalid_argument on an empty grid.
AuditReport decomposition_audit(const WedgeCloud& cloud, std::span<const double> grid, int max_dim,
                                const WedgeOracles* oracles = nullptr);

/// Distance from a C-side point to the Y side of the cloud.
struct AttachmentBounds {
  double lower = 0.0;  ///< r_C(x)
  double upper = 0.0;  ///< min cross distance to Y points
  double cap = 0.0;    ///< ||(r_C(x), min r_Y)||_p
  bool holds() const { return lower <= upper + kMetricTol && upper <= cap + kMetricTol; }
};

/// Throws std::invalid_argument if the Y side has no points besides *.
AttachmentBounds attachment_audit(const WedgeCloud& cloud, std::size_t c_index);

}  // namespace bk
