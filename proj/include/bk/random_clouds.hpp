#pragma once

#include <cstddef>
#include <random>

#include "bk/metric.hpp"
#include "bk/wedge.hpp"

namespace bk {

/// Shortest-path closure of a random weighted complete graph with weights in
/// [lo, hi]; always a metric with all off-diagonal distances >= lo.
FiniteMetric random_metric(std::mt19937_64& rng, std::size_t n, double lo = 0.1, double hi = 2.0);

struct RandomCloudOptions {
  std::size_t max_c = 4;  ///< C-side points including the anchor
  std::size_t max_y = 4;  ///< Y-side points besides *
  LpExponent p = LpExponent::inf();
};

/// A random cloud: a random C-side metric, a snowflaked random Y-side metric
/// with random lambda in [0.5, 2] and alpha in {0.3, 0.5, 1}, and a random
/// choice of whether the anchor is a vertex.
WedgeCloud random_wedge_cloud(std::mt19937_64& rng, const RandomCloudOptions& opts = {});

}  // namespace bk
