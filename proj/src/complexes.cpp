#include "bk/complexes.hpp"

#include <algorithm>
#include <numeric>

#include "bk/lp.hpp"

namespace bk {

int default_max_dim(std::size_t vertex_count) {
  if (vertex_count == 0) return 0;
  return static_cast<int>(std::min<std::size_t>(vertex_count - 1, 7));
}

SimplicialComplex build_monotone_complex(int n, int max_dim,
                                         const std::function<bool(const std::vector<int>&)>& accept) {
  SimplicialComplex k(max_dim);
  std::vector<Simplex> level;
  for (int v = 0; v < n; ++v) {
    if (accept({v})) {
      k.insert(Simplex{v});
      level.push_back(Simplex{v});
    }
  }
  for (int d = 1; d <= max_dim && !level.empty(); ++d) {
    std::vector<Simplex> next;
    for (const Simplex& s : level) {
      for (int v = s.vertices().back() + 1; v < n; ++v) {
        std::vector<int> cand = s.vertices();
        cand.push_back(v);
        const Simplex c(cand);
        bool faces_present = true;
        for (std::size_t i = 0; i + 1 < c.size() && faces_present; ++i)
          faces_present = k.contains(c.facet(i));  // the facet without v is s itself
        if (faces_present && accept(cand)) {
          k.insert(c);
          next.push_back(c);
        }
      }
    }
    level = std::move(next);
  }
  return k;
}

SimplicialComplex rips(const FiniteMetric& metric, double t, int max_dim) {
  const int n = static_cast<int>(metric.size());
  return build_monotone_complex(n, max_dim, [&](const std::vector<int>& s) {
    // Facets are already simplices, so only pairs with the newest vertex matter.
    const int v = s.back();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (!within_scale(metric(s[i], v), t)) return false;
    return true;
  });
}

SimplicialComplex cech_intrinsic(const FiniteMetric& metric, double t, int max_dim) {
  const int n = static_cast<int>(metric.size());
  return build_monotone_complex(n, max_dim, [&](const std::vector<int>& s) {
    for (int w = 0; w < n; ++w) {
      const bool covers = std::all_of(s.begin(), s.end(), [&](int x) { return within_scale(metric(w, x), t); });
      if (covers) return true;
    }
    return false;
  });
}

SimplicialComplex cech_ambient(std::span<const std::size_t> points, const WitnessOracle& oracle, double t,
                               int max_dim) {
  const int n = static_cast<int>(points.size());
  return build_monotone_complex(n, max_dim, [&](const std::vector<int>& s) {
    std::vector<std::size_t> centers;
    for (int v : s) centers.push_back(points[v]);
    const std::vector<double> radii(centers.size(), t);
    const WitnessResult r = oracle.intersect(centers, radii);
    if (r.status == WitnessStatus::NonConverged)
      throw SolverError("witness solver did not converge on simplex " + Simplex(s).to_string(), s);
    return r.feasible();
  });
}

bool sandwich_check(const FiniteMetric& metric, const AmbientEmbedding* ambient, double t, int max_dim) {
  const SimplicialComplex lower = rips(metric, t, max_dim);
  const SimplicialComplex upper = rips(metric, 2.0 * t, max_dim);
  const SimplicialComplex intrinsic = cech_intrinsic(metric, t, max_dim);
  if (!lower.is_subcomplex_of(intrinsic) || !intrinsic.is_subcomplex_of(upper)) return false;
  if (ambient) {
    const SimplicialComplex amb = cech_ambient(ambient->points, *ambient->oracle, t, max_dim);
    if (!lower.is_subcomplex_of(amb) || !amb.is_subcomplex_of(upper)) return false;
  }
  return true;
}

}  // namespace bk
