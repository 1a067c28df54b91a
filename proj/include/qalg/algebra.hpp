#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qalg/linalg.hpp"
#include "qalg/quiver.hpp"

namespace qalg {

struct Term {
  std::size_t index;
  Scalar coeff;
};

using Element = Vector;

// Finite-dimensional algebra given by a basis and structure constants b_i * b_j = sum c_ij^k b_k.
class Algebra {
 public:
  using ProductFn = std::function<Vector(std::size_t, std::size_t)>;

  Algebra() = default;

  Algebra(Field field, std::vector<BasisLabel> basis, std::vector<std::vector<Term>> table,
          std::vector<std::size_t> unit_idempotents, std::optional<std::vector<int>> grading = std::nullopt)
      : field_(field),
        basis_(std::move(basis)),
        table_(std::move(table)),
        units_(std::move(unit_idempotents)),
        grading_(std::move(grading)) {
    validate();
  }

  // Builds the sparse table from a dense product callback.
  static Algebra from_products(Field field, std::vector<BasisLabel> basis, const ProductFn& product,
                               std::vector<std::size_t> unit_idempotents,
                               std::optional<std::vector<int>> grading = std::nullopt) {
    const std::size_t n = basis.size();
    std::vector<std::vector<Term>> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector v = product(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) table[i * n + j].push_back({k, v[k]});
      }
    return Algebra(field, std::move(basis), std::move(table), std::move(unit_idempotents), std::move(grading));
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const BasisLabel& label(std::size_t i) const { return basis_[i]; }
  const std::vector<std::size_t>& unit_idempotents() const { return units_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  bool graded() const { return grading_.has_value(); }
  const std::optional<std::vector<int>>& grading() const { return grading_; }
  int degree(std::size_t i) const { return grading_ ? (*grading_)[i] : 0; }
  int top_degree() const {
    int top = 0;
    if (grading_)
      for (int d : *grading_) top = std::max(top, d);
    return top;
  }

  const std::vector<std::string>& notices() const { return notices_; }
  void add_notice(std::string note) { notices_.push_back(std::move(note)); }

  std::optional<std::size_t> index_of(const BasisLabel& l) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (basis_[i] == l) return i;
    return std::nullopt;
  }

  Vector zero() const { return zero_vector(field_, dim()); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Vector one() const {
    Vector v = zero();
    for (auto e : units_) v[e] = field_.one();
    return v;
  }
  Vector idempotent(std::size_t t) const { return basis_vector(units_[t]); }

  Vector product_vector(std::size_t i, std::size_t j) const {
    Vector v = zero();
    for (const auto& t : product(i, j)) v[t.index] = t.coeff;
    return v;
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) fail(ErrorCode::ShapeMismatch, "element of the wrong dimension");
    if (dim() && (!(x[0].field() == field_) || !(y[0].field() == field_)))
      fail(ErrorCode::FieldMismatch, "element over a different field");
    Vector out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        const auto& terms = product(i, j);
        if (terms.empty()) continue;
        Scalar c = x[i] * y[j];
        for (const auto& t : terms) out[t.index] += c * t.coeff;
      }
    }
    return out;
  }

  // Matrix of a -> x*a (left) or a -> a*x (right) in the basis.
  Matrix left_multiplication(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(x, basis_vector(j)));
    return Matrix::from_columns(field_, dim(), cols);
  }
  Matrix right_multiplication(const Vector& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), x));
    return Matrix::from_columns(field_, dim(), cols);
  }

  // Vector of the subspace spanned by basis elements of degree d (graded algebras only).
  std::vector<std::size_t> indices_of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degree(i) == d) out.push_back(i);
    return out;
  }

  Algebra without_grading() const {
    Algebra a = *this;
    a.grading_.reset();
    return a;
  }

 private:
  void validate() const {
    const std::size_t n = dim();
    if (table_.size() != n * n) fail(ErrorCode::InvalidAlgebra, "structure constant table has the wrong size");
    for (const auto& cell : table_)
      for (const auto& t : cell) {
        if (t.index >= n) fail(ErrorCode::InvalidAlgebra, "structure constant index out of range");
        if (!(t.coeff.field() == field_)) fail(ErrorCode::FieldMismatch, "structure constant over a different field");
      }
    std::set<std::size_t> seen;
    for (auto e : units_)
      if (e >= n || !seen.insert(e).second) fail(ErrorCode::InvalidAlgebra, "bad unit idempotent index");
    if (n > 0 && units_.empty()) fail(ErrorCode::InvalidAlgebra, "no unit idempotents given");
    if (grading_) {
      if (grading_->size() != n) fail(ErrorCode::InvalidAlgebra, "grading has the wrong length");
      for (int d : *grading_)
        if (d < 0) fail(ErrorCode::InvalidAlgebra, "negative degree");
    }
  }

  Field field_;
  std::vector<BasisLabel> basis_;
  std::vector<std::vector<Term>> table_;
  std::vector<std::size_t> units_;
  std::optional<std::vector<int>> grading_;
  std::vector<std::string> notices_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

// Re-expresses A in the basis given by the columns of P (old coordinates), keeping the supplied labels.
// Unit idempotents must remain basis vectors of the new basis.
inline Algebra change_basis(const Algebra& a, const Matrix& p, std::vector<BasisLabel> labels,
                            std::optional<std::vector<int>> grading) {
  auto pinv = inverse(p);
  if (!pinv) fail(ErrorCode::NotInvertible, "change of basis matrix is singular");
  const std::size_t n = a.dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
  std::vector<std::size_t> units;
  for (std::size_t t = 0; t < a.unit_idempotents().size(); ++t) {
    Vector coords = pinv->apply(a.idempotent(t));
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < n; ++i)
      if (coords[i].is_one() && !hit) hit = i;
    if (!hit || !(coords == unit_vector(a.field(), n, *hit)))
      fail(ErrorCode::InvalidAlgebra, "change of basis moved a unit idempotent off the basis");
    units.push_back(*hit);
  }
  Algebra out = Algebra::from_products(
      a.field(), std::move(labels),
      [&](std::size_t i, std::size_t j) { return pinv->apply(a.multiply(cols[i], cols[j])); }, units,
      std::move(grading));
  for (const auto& note : a.notices()) out.add_notice(note);
  return out;
}

struct Violation {
  std::string kind;  // associativity, unit, idempotent, grading
  std::vector<std::size_t> indices;
  std::string detail;
};

// Exhaustive consistency check of a structure constant table. An empty result means the table passes.
inline std::vector<Violation> check_algebra(const Algebra& a) {
  std::vector<Violation> out;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
        for (const auto& t : ij)
          for (const auto& u : a.product(t.index, k)) lhs[u.index] += t.coeff * u.coeff;
        for (const auto& t : a.product(j, k))
          for (const auto& u : a.product(i, t.index)) rhs[u.index] += t.coeff * u.coeff;
        if (!(lhs == rhs)) out.push_back({"associativity", {i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)"});
      }
    }
  Vector one = a.one();
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = a.basis_vector(i);
    if (!(a.multiply(one, b) == b)) out.push_back({"unit", {i}, "1 * b != b"});
    if (!(a.multiply(b, one) == b)) out.push_back({"unit", {i}, "b * 1 != b"});
  }
  const auto& units = a.unit_idempotents();
  for (std::size_t s = 0; s < units.size(); ++s)
    for (std::size_t t = 0; t < units.size(); ++t) {
      Vector expect = s == t ? a.basis_vector(units[s]) : a.zero();
      if (!(a.product_vector(units[s], units[t]) == expect))
        out.push_back({"idempotent", {units[s], units[t]}, "unit idempotents not orthogonal idempotents"});
    }
  if (a.graded()) {
    for (auto e : units)
      if (a.degree(e) != 0) out.push_back({"grading", {e}, "idempotent of nonzero degree"});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : a.product(i, j))
          if (a.degree(t.index) != a.degree(i) + a.degree(j))
            out.push_back({"grading", {i, j, t.index}, "product leaves the expected degree"});
  }
  return out;
}

// Linear map between algebras; column i is the image of source basis element i.
struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;

  static AlgebraMorphism identity(const AlgebraPtr& a) { return {a, a, Matrix::identity(a->field(), a->dim())}; }

  Vector apply(const Vector& v) const { return matrix.apply(v); }
  Vector image(std::size_t i) const { return matrix.column(i); }

  bool is_endomorphism() const { return source == target || (source && target && source.get() == target.get()); }
  bool is_identity() const { return matrix.is_identity(); }

  // this after g (apply g first)
  AlgebraMorphism after(const AlgebraMorphism& g) const {
    if (g.target->dim() != source->dim()) fail(ErrorCode::ShapeMismatch, "morphisms do not compose");
    return {g.source, target, matrix * g.matrix};
  }

  AlgebraMorphism inverse() const {
    if (matrix.rows() != matrix.cols()) fail(ErrorCode::NotInvertible, "morphism between spaces of different dimension");
    auto inv = qalg::inverse(matrix);
    if (!inv) fail(ErrorCode::NotInvertible, "morphism matrix is singular");
    return {target, source, *inv};
  }

  AlgebraMorphism power(std::uint64_t e) const { return {source, target, matrix_power(matrix, e)}; }

  bool operator==(const AlgebraMorphism& o) const { return matrix == o.matrix; }
};

// Returns a description of the first failure of unitality or multiplicativity, if any.
inline std::optional<std::string> morphism_defect(const AlgebraMorphism& f) {
  const Algebra& s = *f.source;
  const Algebra& t = *f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) return "matrix shape does not match the algebras";
  if (!(f.apply(s.one()) == t.one())) return "does not map 1 to 1";
  std::vector<Vector> images;
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(f.image(i));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!(f.apply(s.product_vector(i, j)) == t.multiply(images[i], images[j])))
        return "f(b" + std::to_string(i) + " b" + std::to_string(j) + ") != f(b" + std::to_string(i) + ") f(b" +
               std::to_string(j) + ")";
  return std::nullopt;
}

inline void verify_morphism(const AlgebraMorphism& f, ErrorCode code = ErrorCode::NotMultiplicative) {
  if (auto d = morphism_defect(f)) fail(code, *d);
}

inline void verify_automorphism(const AlgebraMorphism& f, ErrorCode code = ErrorCode::NotAutomorphism) {
  if (f.source->dim() != f.target->dim()) fail(code, "source and target differ");
  if (auto d = morphism_defect(f)) fail(code, *d);
  if (!qalg::inverse(f.matrix)) fail(code, "matrix is singular");
}

}  // namespace qalg
