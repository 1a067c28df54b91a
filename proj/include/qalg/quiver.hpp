#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    validate();
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::size_t vertex_index(const std::string& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) fail(ErrorCode::InvalidQuiver, "unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::optional<std::size_t> arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == name) return i;
    return std::nullopt;
  }

  // multiplicity[i][j] = number of arrows from vertex i to vertex j
  std::vector<std::vector<std::size_t>> multiplicities() const {
    std::vector<std::vector<std::size_t>> m(vertices_.size(), std::vector<std::size_t>(vertices_.size(), 0));
    for (const auto& a : arrows_) ++m[vertex_index(a.source)][vertex_index(a.target)];
    return m;
  }

  bool operator==(const Quiver&) const = default;

 private:
  void validate() const {
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) fail(ErrorCode::InvalidQuiver, "duplicate vertex id");
    std::set<std::string> names;
    for (const auto& a : arrows_) {
      if (!names.insert(a.name).second) fail(ErrorCode::InvalidQuiver, "duplicate arrow name '" + a.name + "'");
      if (!seen.count(a.source) || !seen.count(a.target))
        fail(ErrorCode::InvalidQuiver, "arrow '" + a.name + "' uses an undeclared vertex");
    }
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// Quivers are isomorphic when some vertex bijection preserves all arrow multiplicities.
inline bool quivers_isomorphic(const Quiver& a, const Quiver& b) {
  if (a.vertices().size() != b.vertices().size() || a.arrows().size() != b.arrows().size()) return false;
  auto ma = a.multiplicities();
  auto mb = b.multiplicities();
  const std::size_t n = ma.size();
  if (n > 9) fail(ErrorCode::OutOfScope, "quiver isomorphism test limited to 9 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = ma[i][j] == mb[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Provenance of a basis element. Paths compose left to right: {a, b} is a followed by b.
struct BasisLabel {
  enum class Kind { Vertex, Path, Group, Smash, Dual, Matrix };

  Kind kind = Kind::Vertex;
  std::string vertex;
  std::vector<std::string> path;
  std::size_t index = 0;   // group element (Group), dual basis index p_h (Smash), row block (Matrix)
  std::size_t column = 0;  // column block (Matrix)
  std::shared_ptr<const BasisLabel> inner;

  static BasisLabel of_vertex(std::string v) {
    BasisLabel l;
    l.vertex = std::move(v);
    return l;
  }
  static BasisLabel of_path(std::vector<std::string> arrows) {
    BasisLabel l;
    l.kind = Kind::Path;
    l.path = std::move(arrows);
    return l;
  }
  static BasisLabel group(const BasisLabel& in, std::size_t g) { return wrap(Kind::Group, in, g, 0); }
  static BasisLabel smash(const BasisLabel& in, std::size_t h) { return wrap(Kind::Smash, in, h, 0); }
  static BasisLabel dual(const BasisLabel& in) { return wrap(Kind::Dual, in, 0, 0); }
  static BasisLabel matrix(std::size_t row, std::size_t col, const BasisLabel& in) {
    return wrap(Kind::Matrix, in, row, col);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Vertex: return "e" + vertex;
      case Kind::Path: {
        std::string s;
        for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "*" : "") + path[i];
        return s;
      }
      case Kind::Group: return "(" + inner->to_string() + ")#g" + std::to_string(index);
      case Kind::Smash: return "(" + inner->to_string() + ")p" + std::to_string(index);
      case Kind::Dual: return "D(" + inner->to_string() + ")";
      case Kind::Matrix:
        return "[" + std::to_string(index) + "," + std::to_string(column) + "](" + inner->to_string() + ")";
    }
    return "?";
  }

  bool operator==(const BasisLabel& o) const {
    if (kind != o.kind || vertex != o.vertex || path != o.path || index != o.index || column != o.column) return false;
    if (!inner || !o.inner) return !inner && !o.inner;
    return *inner == *o.inner;
  }

 private:
  static BasisLabel wrap(Kind k, const BasisLabel& in, std::size_t index, std::size_t column) {
    BasisLabel l;
    l.kind = k;
    l.index = index;
    l.column = column;
    l.inner = std::make_shared<const BasisLabel>(in);
    return l;
  }
};

struct RelationTerm {
  Scalar coeff;
  std::vector<std::string> path;
};

// A relation sum(coeff * path) = 0 over parallel paths of one length.
struct Relation {
  std::vector<RelationTerm> terms;
};

struct Presentation {
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
  int truncate_radical = 3;
};

}  // namespace qalg
