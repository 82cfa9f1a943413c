#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bk {

/// A nonempty, strictly increasing list of vertex ids.
class Simplex {
 public:
  /// Sorts the input; throws std::invalid_argument if empty or if a vertex
  /// repeats.
  explicit Simplex(std::vector<int> vertices);
  Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

  const std::vector<int>& vertices() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  bool contains(int vertex) const;

  /// The codimension-one face obtained by dropping position i; requires dim() >= 1.
  Simplex facet(std::size_t i) const;

  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  struct Trusted {};
  Simplex(std::vector<int> sorted, Trusted) : v_(std::move(sorted)) {}

  std::vector<int> v_;
};

/// A finite abstract simplicial complex, stored per dimension and closed
/// under taking faces.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(int max_dim = 0);

  int max_dim() const { return max_dim_; }
  /// Highest dimension holding a simplex; -1 when empty.
  int dimension() const;
  bool empty() const { return dimension() < 0; }

  /// Inserts the simplex together with all its faces. Throws
  /// std::invalid_argument if its dimension exceeds max_dim().
  void insert(const Simplex& s);
  bool contains(const Simplex& s) const;

  const std::set<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const;
  std::size_t size() const;
  std::vector<int> vertices() const;
  std::vector<Simplex> all() const;

  /// Maximal simplices (not a proper face of another stored simplex).
  std::vector<Simplex> maximal() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// A simplex of *this missing from other, if any.
  std::optional<Simplex> first_missing_from(const SimplicialComplex& other) const;
  bool is_face_closed() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  int max_dim_;
  std::vector<std::set<Simplex>> by_dim_;
};

/// The full simplex on `vertex_count` vertices truncated at max_dim.
SimplicialComplex full_simplex(int vertex_count, int max_dim);

}  // namespace bk
