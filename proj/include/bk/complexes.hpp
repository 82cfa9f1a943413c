#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bk/metric.hpp"
#include "bk/simplex.hpp"
#include "bk/witness.hpp"

namespace bk {

/// min(n - 1, 7), and 0 for empty input.
int default_max_dim(std::size_t vertex_count);

/// Builds the complex on vertices 0..n-1 whose simplices are the vertex sets
/// accepted by `accept`, which must be monotone under removing vertices.
/// Candidates are generated level by level; a candidate is only passed to
/// `accept` once all of its facets are present, so each vertex subset is
/// queried at most once.
SimplicialComplex build_monotone_complex(int n, int max_dim,
                                         const std::function<bool(const std::vector<int>&)>& accept);

/// Flag complex of the graph {d(i,j) <= t}.
SimplicialComplex rips(const FiniteMetric& metric, double t, int max_dim);

/// sigma is a simplex iff some point w of the space has d(w, s) <= t for all s in sigma.
SimplicialComplex cech_intrinsic(const FiniteMetric& metric, double t, int max_dim);

/// Vertex v of the result is oracle point points[v]; sigma is a simplex iff
/// the radius-t closed balls around its points meet. Throws SolverError on an
/// undecidable query.
SimplicialComplex cech_ambient(std::span<const std::size_t> points, const WitnessOracle& oracle, double t,
                               int max_dim);

/// A cloud placed inside an ambient domain.
struct AmbientEmbedding {
  const WitnessOracle* oracle = nullptr;
  std::vector<std::size_t> points;
};

/// rips(t) <= cech(t) <= rips(2t) for the intrinsic complex and, when given,
/// the ambient one. When an embedding is supplied `metric` must be the
/// restriction of the ambient distance to its points.
bool sandwich_check(const FiniteMetric& metric, const AmbientEmbedding* ambient, double t, int max_dim);

}  // namespace bk
