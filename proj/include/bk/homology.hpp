#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bk/simplex.hpp"
#include "bk/wedge_complex.hpp"

namespace bk {

/// Complexes larger than this are rejected by the homology routines.
inline constexpr std::size_t kMaxHomologySimplices = std::size_t{1} << 14;

/// A dense GF(2) matrix stored as packed bit columns.
class BoundaryMatrix {
 public:
  BoundaryMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  std::size_t column_weight(std::size_t c) const;
  bool is_zero() const;

  /// Rank over GF(2) by column reduction.
  std::size_t rank() const;
  /// this * rhs; throws std::invalid_argument on a shape mismatch.
  BoundaryMatrix operator*(const BoundaryMatrix& rhs) const;

 private:
  std::size_t rows_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> cols_;
};

/// Rows indexed by the sorted (k-1)-simplices, columns by the sorted
/// k-simplices. Throws std::out_of_range unless 1 <= k <= complex.max_dim(),
/// and std::length_error above kMaxHomologySimplices.
BoundaryMatrix boundary(const SimplicialComplex& complex, int k);

struct BettiNumbers {
  std::vector<std::size_t> betti;   ///< beta_0 .. beta_maxDim
  std::vector<std::size_t> counts;  ///< simplices per dimension
  long euler = 0;                   ///< alternating simplex count
  /// Nonempty and a cone (some vertex lies in every maximal simplex), which
  /// covers the full simplex. Never inferred from Betti numbers.
  bool contractible = false;

  long betti_euler() const;
};

/// Betti numbers over GF(2) up to the complex's max_dim. Throws
/// std::length_error above kMaxHomologySimplices.
BettiNumbers betti(const SimplicialComplex& complex);

/// Connected components of the 1-skeleton by union-find.
std::size_t component_count(const SimplicialComplex& complex);

/// Some vertex lies in every maximal simplex.
bool is_cone(const SimplicialComplex& complex);

enum class ComplexKind { Rips, CechIntrinsic, CechAmbient };

std::string to_string(ComplexKind k);
/// Accepts "rips", "cech-intrinsic", "cech-ambient".
ComplexKind parse_complex_kind(const std::string& text);

/// One complex of the requested kind on the cloud at scale t.
SimplicialComplex build_complex(const WedgeCloud& cloud, ComplexKind kind, double t, int max_dim,
                                const WedgeOracles* oracles = nullptr);

struct BettiProfile {
  struct Entry {
    double t = 0.0;
    SimplicialComplex complex;
    BettiNumbers betti;
  };
  ComplexKind kind = ComplexKind::Rips;
  std::vector<Entry> per_scale;  ///< sorted by t
  /// Indices i >= 1 where the Betti vector differs from entry i-1.
  std::vector<std::size_t> changes;
};

/// Throws std::invalid_argument on an empty grid.
BettiProfile betti_sweep(const WedgeCloud& cloud, std::span<const double> grid, ComplexKind kind, int max_dim,
                         const WedgeOracles* oracles = nullptr);

}  // namespace bk
