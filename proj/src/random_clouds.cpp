#include "bk/random_clouds.hpp"

#include <algorithm>

namespace bk {

FiniteMetric random_metric(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> w(lo, hi);
  DistanceTable d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = w(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return FiniteMetric(d);
}

WedgeCloud random_wedge_cloud(std::mt19937_64& rng, const RandomCloudOptions& opts) {
  std::uniform_int_distribution<std::size_t> nc(1, std::max<std::size_t>(opts.max_c, 1));
  std::uniform_int_distribution<std::size_t> ny(1, std::max<std::size_t>(opts.max_y, 1));
  std::uniform_real_distribution<double> lam(0.5, 2.0);
  constexpr double kAlphas[] = {0.3, 0.5, 1.0};
  std::uniform_int_distribution<int> pick(0, 2);
  std::bernoulli_distribution coin(0.5);

  const std::size_t c_count = nc(rng);
  const std::size_t y_count = ny(rng) + 1;
  BKParams params{lam(rng), kAlphas[pick(rng)], opts.p};
  const FiniteMetric c = random_metric(rng, c_count);
  const FiniteMetric y = snowflake(random_metric(rng, y_count), params.lambda, params.alpha);
  std::uniform_int_distribution<std::size_t> anchor(0, c_count - 1);
  std::uniform_int_distribution<std::size_t> star(0, y_count - 1);
  const std::size_t a = anchor(rng);
  const std::size_t s = star(rng);
  // A lone anchor must be a vertex, or the C side would contribute nothing.
  const bool include = c_count == 1 || coin(rng);
  return WedgeCloud(PointedFiniteMetric(c, a), PointedFiniteMetric(y, s), params, include);
}

}  // namespace bk
