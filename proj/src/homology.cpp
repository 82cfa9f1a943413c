#include "bk/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bk/complexes.hpp"

namespace bk {

BoundaryMatrix::BoundaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), words_((rows + 63) / 64), cols_(cols, std::vector<std::uint64_t>(words_, 0)) {}

bool BoundaryMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("boundary matrix index out of range");
  return (cols_[c][r / 64] >> (r % 64)) & 1u;
}

void BoundaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("boundary matrix index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (r % 64);
  if (value)
    cols_[c][r / 64] |= bit;
  else
    cols_[c][r / 64] &= ~bit;
}

std::size_t BoundaryMatrix::column_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::uint64_t word : cols_.at(c)) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BoundaryMatrix::is_zero() const {
  for (const auto& col : cols_)
    for (std::uint64_t word : col)
      if (word) return false;
  return true;
}

std::size_t BoundaryMatrix::rank() const {
  auto cols = cols_;
  std::map<std::size_t, std::size_t> pivot_of_low;  // lowest-set row -> reduced column
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    for (;;) {
      std::size_t w = words_;
      while (w > 0 && col[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t low = (w - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(col[w - 1]));
      const auto it = pivot_of_low.find(low);
      if (it == pivot_of_low.end()) {
        pivot_of_low.emplace(low, c);
        ++rank;
        break;
      }
      const auto& piv = cols[it->second];
      for (std::size_t i = 0; i < words_; ++i) col[i] ^= piv[i];
    }
  }
  return rank;
}

BoundaryMatrix BoundaryMatrix::operator*(const BoundaryMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("boundary matrix product: shape mismatch");
  BoundaryMatrix out(rows_, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c)
    for (std::size_t k = 0; k < cols(); ++k)
      if (rhs.get(k, c))
        for (std::size_t i = 0; i < words_; ++i) out.cols_[c][i] ^= cols_[k][i];
  return out;
}

namespace {

void check_size(const SimplicialComplex& k) {
  if (k.size() > kMaxHomologySimplices)
    throw std::length_error("complex has " + std::to_string(k.size()) + " simplices; the limit is " +
                            std::to_string(kMaxHomologySimplices));
}

}  // namespace

BoundaryMatrix boundary(const SimplicialComplex& complex, int k) {
  if (k < 1 || k > complex.max_dim())
    throw std::out_of_range("boundary dimension " + std::to_string(k) + " outside 1.." +
                            std::to_string(complex.max_dim()));
  check_size(complex);
  const auto& rows = complex.simplices(k - 1);
  const auto& cols = complex.simplices(k);
  std::map<Simplex, std::size_t> row_index;
  for (const Simplex& s : rows) row_index.emplace(s, row_index.size());
  BoundaryMatrix m(rows.size(), cols.size());
  std::size_t c = 0;
  for (const Simplex& s : cols) {
    for (std::size_t i = 0; i < s.size(); ++i) m.set(row_index.at(s.facet(i)), c, true);
    ++c;
  }
  return m;
}

long BettiNumbers::betti_euler() const {
  long e = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(betti[i]);
  return e;
}

BettiNumbers betti(const SimplicialComplex& complex) {
  check_size(complex);
  const int top = complex.max_dim();
  BettiNumbers out;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);  // ranks[k] = rank of d_k
  for (int k = 1; k <= top; ++k)
    if (complex.count(k) > 0 && complex.count(k - 1) > 0) ranks[k] = boundary(complex, k).rank();
  for (int k = 0; k <= top; ++k) {
    const std::size_t n = complex.count(k);
    out.counts.push_back(n);
    out.betti.push_back(n - ranks[k] - ranks[k + 1]);
    out.euler += (k % 2 ? -1 : 1) * static_cast<long>(n);
  }
  out.contractible = is_cone(complex);
  return out;
}

std::size_t component_count(const SimplicialComplex& complex) {
  const std::vector<int> vs = complex.vertices();
  std::map<int, int> parent;
  for (int v : vs) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vs.size();
  if (complex.max_dim() >= 1)
    for (const Simplex& e : complex.simplices(1)) {
      const int a = find(e[0]);
      const int b = find(e[1]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

bool is_cone(const SimplicialComplex& complex) {
  if (complex.empty()) return false;
  const std::vector<Simplex> maximal = complex.maximal();
  for (int v : complex.vertices())
    if (std::all_of(maximal.begin(), maximal.end(), [v](const Simplex& s) { return s.contains(v); })) return true;
  return false;
}

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::Rips: return "rips";
    case ComplexKind::CechIntrinsic: return "cech-intrinsic";
    case ComplexKind::CechAmbient: return "cech-ambient";
  }
  return "unknown";
}

ComplexKind parse_complex_kind(const std::string& text) {
  for (ComplexKind k : {ComplexKind::Rips, ComplexKind::CechIntrinsic, ComplexKind::CechAmbient})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown complex kind '" + text + "' (expected rips, cech-intrinsic or cech-ambient)");
}

SimplicialComplex build_complex(const WedgeCloud& cloud, ComplexKind kind, double t, int max_dim,
                                const WedgeOracles* oracles) {
  switch (kind) {
    case ComplexKind::Rips: return rips_wedge(cloud, t, max_dim);
    case ComplexKind::CechIntrinsic: return cech_intrinsic(full_distance_table(cloud), t, max_dim);
    case ComplexKind::CechAmbient: return cech_wedge_ambient(cloud, t, max_dim, oracles ? *oracles : default_oracles(cloud));
  }
  throw std::logic_error("unhandled complex kind");
}

BettiProfile betti_sweep(const WedgeCloud& cloud, std::span<const double> grid, ComplexKind kind, int max_dim,
                         const WedgeOracles* oracles) {
  if (grid.empty()) throw std::invalid_argument("Betti sweep needs a nonempty scale grid");
  std::vector<double> ts(grid.begin(), grid.end());
  std::sort(ts.begin(), ts.end());
  const WedgeOracles fallback = oracles ? WedgeOracles{} : default_oracles(cloud);
  const WedgeOracles& o = oracles ? *oracles : fallback;

  BettiProfile out;
  out.kind = kind;
  for (double t : ts) {
    BettiProfile::Entry e;
    e.t = t;
    e.complex = build_complex(cloud, kind, t, max_dim, &o);
    e.betti = betti(e.complex);
    if (!out.per_scale.empty() && out.per_scale.back().betti.betti != e.betti.betti)
      out.changes.push_back(out.per_scale.size());
    out.per_scale.push_back(std::move(e));
  }
  return out;
}

}  // namespace bk
