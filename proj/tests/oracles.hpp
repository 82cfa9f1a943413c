#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the FiniteMetric container.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "bk/metric.hpp"
#include "bk/simplex.hpp"

namespace oracle {

using SimplexSet = std::set<std::vector<int>>;

inline constexpr double kTol = 1e-12;

/// Every nonempty subset of {0..n-1} with at most max_size elements.
inline std::vector<std::vector<int>> subsets(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (static_cast<int>(s.size()) <= max_size) out.push_back(s);
  }
  return out;
}

inline SimplexSet filter(int n, int max_dim, const std::function<bool(const std::vector<int>&)>& keep) {
  SimplexSet out;
  for (const auto& s : subsets(n, max_dim + 1))
    if (keep(s)) out.insert(s);
  return out;
}

inline SimplexSet rips(const std::function<double(int, int)>& d, int n, double t, int max_dim) {
  return filter(n, max_dim, [&](const std::vector<int>& s) {
    for (int a : s)
      for (int b : s)
        if (d(a, b) > t + kTol) return false;
    return true;
  });
}

inline SimplexSet rips(const bk::FiniteMetric& m, double t, int max_dim) {
  return rips([&](int a, int b) { return m(a, b); }, static_cast<int>(m.size()), t, max_dim);
}

/// Cech complex with witnesses drawn from `witnesses` (indices into d).
inline SimplexSet cech(const std::function<double(int, int)>& d, const std::vector<int>& vertices,
                       const std::vector<int>& witnesses, double t, int max_dim) {
  return filter(static_cast<int>(vertices.size()), max_dim, [&](const std::vector<int>& s) {
    for (int w : witnesses)
      if (std::all_of(s.begin(), s.end(), [&](int v) { return d(w, vertices[v]) <= t + kTol; })) return true;
    return false;
  });
}

inline SimplexSet as_set(const bk::SimplicialComplex& k) {
  SimplexSet out;
  for (const bk::Simplex& s : k.all()) out.insert(s.vertices());
  return out;
}

/// Rank over GF(2) of a 0/1 matrix given by rows.
inline std::size_t gf2_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

/// Betti numbers of a face-closed simplex set, dimensions 0..max_dim.
inline std::vector<std::size_t> betti(const SimplexSet& k, int max_dim) {
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(max_dim) + 1);
  for (const auto& s : k) by_dim[s.size() - 1].push_back(s);
  std::vector<std::size_t> rank(static_cast<std::size_t>(max_dim) + 2, 0);
  for (int d = 1; d <= max_dim; ++d) {
    const auto& rows = by_dim[static_cast<std::size_t>(d) - 1];
    const auto& cols = by_dim[static_cast<std::size_t>(d)];
    if (rows.empty() || cols.empty()) continue;
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
        std::vector<int> face = cols[c];
        face.erase(face.begin() + static_cast<long>(drop));
        const auto it = std::find(rows.begin(), rows.end(), face);
        m[static_cast<std::size_t>(it - rows.begin())][c] = 1;
      }
    rank[static_cast<std::size_t>(d)] = gf2_rank(m);
  }
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_dim; ++d)
    out.push_back(by_dim[static_cast<std::size_t>(d)].size() - rank[static_cast<std::size_t>(d)] -
                  rank[static_cast<std::size_t>(d) + 1]);
  return out;
}

}  // namespace oracle
