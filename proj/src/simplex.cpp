#include "bk/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bk {

Simplex::Simplex(std::vector<int> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw std::invalid_argument("repeated vertex in simplex");
}

bool Simplex::contains(int vertex) const { return std::binary_search(v_.begin(), v_.end(), vertex); }

Simplex Simplex::facet(std::size_t i) const {
  if (v_.size() < 2) throw std::logic_error("a vertex has no facets");
  std::vector<int> f;
  f.reserve(v_.size() - 1);
  for (std::size_t k = 0; k < v_.size(); ++k)
    if (k != i) f.push_back(v_[k]);
  return Simplex(std::move(f), Trusted{});
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < v_.size(); ++k) os << (k ? "," : "") << v_[k];
  os << '}';
  return os.str();
}

SimplicialComplex::SimplicialComplex(int max_dim) : max_dim_(max_dim), by_dim_(max_dim + 1) {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
}

int SimplicialComplex::dimension() const {
  for (int d = max_dim_; d >= 0; --d)
    if (!by_dim_[d].empty()) return d;
  return -1;
}

void SimplicialComplex::insert(const Simplex& s) {
  if (s.dim() > max_dim_)
    throw std::invalid_argument("simplex " + s.to_string() + " exceeds max dimension " + std::to_string(max_dim_));
  if (!by_dim_[s.dim()].insert(s).second) return;
  if (s.dim() == 0) return;
  for (std::size_t i = 0; i < s.size(); ++i) insert(s.facet(i));
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return s.dim() <= max_dim_ && by_dim_[s.dim()].count(s) > 0;
}

const std::set<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::set<Simplex> none;
  if (dim < 0 || dim > max_dim_) return none;
  return by_dim_[dim];
}

std::size_t SimplicialComplex::count(int dim) const { return simplices(dim).size(); }

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& s : by_dim_) n += s.size();
  return n;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& s : by_dim_[0]) out.push_back(s[0]);
  return out;
}

std::vector<Simplex> SimplicialComplex::all() const {
  std::vector<Simplex> out;
  for (const auto& s : by_dim_) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal() const {
  std::set<Simplex> faces;
  for (int d = 1; d <= max_dim_; ++d)
    for (const auto& s : by_dim_[d])
      for (std::size_t i = 0; i < s.size(); ++i) faces.insert(s.facet(i));
  std::vector<Simplex> out;
  for (const auto& s : all())
    if (!faces.count(s)) out.push_back(s);
  return out;
}

std::optional<Simplex> SimplicialComplex::first_missing_from(const SimplicialComplex& other) const {
  for (const auto& level : by_dim_)
    for (const auto& s : level)
      if (!other.contains(s)) return s;
  return std::nullopt;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return !first_missing_from(other).has_value();
}

bool SimplicialComplex::is_face_closed() const {
  for (int d = 1; d <= max_dim_; ++d)
    for (const auto& s : by_dim_[d])
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!by_dim_[d - 1].count(s.facet(i))) return false;
  return true;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.is_subcomplex_of(b) && b.is_subcomplex_of(a);
}

SimplicialComplex full_simplex(int vertex_count, int max_dim) {
  SimplicialComplex k(max_dim);
  if (vertex_count <= 0) return k;
  // Every subset of at most max_dim + 1 vertices.
  std::vector<int> idx;
  auto rec = [&](auto&& self, int next) -> void {
    if (!idx.empty()) k.insert(Simplex(idx));
    if (static_cast<int>(idx.size()) == max_dim + 1) return;
    for (int v = next; v < vertex_count; ++v) {
      idx.push_back(v);
      self(self, v + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return k;
}

}  // namespace bk
