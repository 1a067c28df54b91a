#pragma once

// Skew group algebras, Z2 smash products, 2-quasi-Veronese and Beilinson algebras, trivial and
// twisted trivial extensions, separated quivers and the smash/skew double.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qalg/frobenius.hpp"

namespace qalg {

// ---------------------------------------------------------------- group actions

struct GroupAction {
  AlgebraPtr algebra;
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = gh, identity at index 0
  std::vector<AlgebraMorphism> automorphisms;

  std::size_t order() const { return elements.size(); }

  std::size_t inverse_of(std::size_t g) const {
    for (std::size_t h = 0; h < order(); ++h)
      if (table[g][h] == 0) return h;
    fail(ErrorCode::ActionMismatch, "group element without inverse");
  }

  // Group axioms, automorphism property and g(h(x)) = (gh)(x).
  void verify() const {
    const std::size_t n = order();
    if (n == 0 || table.size() != n || automorphisms.size() != n)
      fail(ErrorCode::ActionMismatch, "group table and automorphism list disagree in size");
    for (const auto& row : table)
      if (row.size() != n) fail(ErrorCode::ActionMismatch, "group table is not square");
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        if (table[g][h] >= n) fail(ErrorCode::ActionMismatch, "group table entry out of range");
        for (std::size_t k = 0; k < n; ++k)
          if (table[table[g][h]][k] != table[g][table[h][k]]) fail(ErrorCode::ActionMismatch, "group table is not associative");
      }
    for (std::size_t g = 0; g < n; ++g) {
      if (table[0][g] != g || table[g][0] != g) fail(ErrorCode::ActionMismatch, "index 0 is not the identity");
      inverse_of(g);
    }
    for (std::size_t g = 0; g < n; ++g) {
      const auto& a = automorphisms[g];
      if (a.source.get() != algebra.get() || a.target.get() != algebra.get())
        fail(ErrorCode::ActionMismatch, "automorphism of a different algebra");
      verify_automorphism(a, ErrorCode::ActionMismatch);
    }
    if (!automorphisms[0].is_identity()) fail(ErrorCode::ActionMismatch, "identity element acts nontrivially");
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (!(automorphisms[g].after(automorphisms[h]) == automorphisms[table[g][h]]))
          fail(ErrorCode::ActionMismatch, "action is not a homomorphism at (" + elements[g] + ", " + elements[h] + ")");
  }
};

// The cyclic group <sigma> of the given order acting through powers of sigma.
inline GroupAction cyclic_action(const AlgebraMorphism& sigma, std::size_t order) {
  GroupAction g;
  g.algebra = sigma.source;
  for (std::size_t i = 0; i < order; ++i) {
    g.elements.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < order; ++j) row.push_back((i + j) % order);
    g.table.push_back(std::move(row));
    g.automorphisms.push_back(sigma.power(i));
  }
  g.verify();
  return g;
}

inline bool is_graded_map(const AlgebraMorphism& f) {
  if (!f.source->graded() || !f.target->graded()) return false;
  for (std::size_t i = 0; i < f.source->dim(); ++i) {
    Vector img = f.image(i);
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero() && f.target->degree(k) != f.source->degree(i)) return false;
  }
  return true;
}

// Basis b (x) g at index g * dim + i; (a (x) g)(b (x) h) = a g(b) (x) gh.
inline Algebra skew_group_algebra(const GroupAction& G) {
  G.verify();
  const Algebra& l = *G.algebra;
  const Field f = l.field();
  const std::size_t n = l.dim(), m = G.order();
  std::vector<BasisLabel> labels;
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t i = 0; i < n; ++i) labels.push_back(BasisLabel::group(l.label(i), g));
  std::vector<Matrix> acts;
  for (const auto& a : G.automorphisms) acts.push_back(a.matrix);
  auto product = [&](std::size_t x, std::size_t y) {
    std::size_t g = x / n, i = x % n, h = y / n, j = y % n;
    Vector out = zero_vector(f, n * m);
    Vector prod = l.multiply(l.basis_vector(i), acts[g].column(j));
    std::size_t gh = G.table[g][h];
    for (std::size_t k = 0; k < n; ++k) out[gh * n + k] = prod[k];
    return out;
  };
  std::optional<std::vector<int>> grading;
  bool keep = l.graded() && (f.characteristic() == 0 || m % f.characteristic() != 0);
  for (const auto& a : G.automorphisms) keep = keep && is_graded_map(a);
  if (keep) {
    grading.emplace();
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t i = 0; i < n; ++i) grading->push_back(l.degree(i));
  }
  Algebra out = Algebra::from_products(f, std::move(labels), product, l.unit_idempotents(), std::move(grading));
  if (l.graded() && !keep) out.add_notice("grading dropped: the degree-zero part of the skew group algebra need not be semisimple");
  return out;
}

// <a (x) g, b (x) h> = <a, g(b)> when gh = 1 and 0 otherwise.
inline BilinearForm skew_group_form(const BilinearForm& b, const GroupAction& G, const AlgebraPtr& skew) {
  if (!b.nondegenerate) fail(ErrorCode::DegenerateInput, "input form is degenerate");
  const Algebra& l = *G.algebra;
  const std::size_t n = l.dim(), m = G.order();
  if (skew->dim() != n * m) fail(ErrorCode::ShapeMismatch, "skew group algebra has the wrong dimension");
  Matrix g(l.field(), n * m, n * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (G.table[x][y] != 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(x * n + i, y * n + j) = b(l.basis_vector(i), G.automorphisms[x].image(j));
    }
  bool nd = !determinant(g).is_zero();
  BilinearForm out{skew, std::move(g), nd};
  if (!out.nondegenerate) fail(ErrorCode::VerificationFailed, "skew group form is degenerate");
  if (!is_associative(out)) fail(ErrorCode::VerificationFailed, "skew group form is not associative");
  return out;
}

struct SkewSymmetryReport {
  std::uint64_t group_order = 0;
  AlgebraPtr skew;
  BilinearForm form;
  AlgebraMorphism nakayama;
  Vector witness;  // 1 (x) nu
  bool witness_verified = false;
  InnerResult inner;
  bool symmetric = false;
};

// Builds L<nu> for the Nakayama automorphism nu of the given form and checks that 1 (x) nu conjugates
// the Nakayama automorphism of the skew group algebra.
inline SkewSymmetryReport skew_group_symmetric_check(const BilinearForm& b, std::uint64_t bound = 64,
                                                     std::uint64_t seed = 0) {
  AlgebraMorphism nu = nakayama_from_form(b);
  Order o = automorphism_order(nu, bound);
  if (!o.is_finite()) fail(ErrorCode::InfiniteOrder, "Nakayama automorphism has no finite order within the bound");
  const Field f = b.algebra->field();
  if (f.characteristic() != 0 && o.value % f.characteristic() == 0)
    fail(ErrorCode::CharDividesOrder, "the characteristic divides the order of the Nakayama automorphism");
  SkewSymmetryReport r;
  r.group_order = o.value;
  GroupAction G = cyclic_action(nu, o.value);
  r.skew = share(skew_group_algebra(G));
  r.form = skew_group_form(b, G, r.skew);
  r.nakayama = nakayama_from_form(r.form);
  const std::size_t n = b.algebra->dim();
  r.witness = r.skew->zero();
  Vector one = b.algebra->one();
  std::size_t gen = o.value > 1 ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) r.witness[gen * n + i] = one[i];
  r.witness_verified = detail::conjugates(*r.skew, r.nakayama, r.witness);
  r.inner = is_inner(r.nakayama, seed);
  r.symmetric = r.witness_verified || r.inner.inner();
  if (!r.witness_verified)
    fail(ErrorCode::VerificationFailed, "1 (x) nu does not conjugate the Nakayama automorphism of the skew group algebra");
  return r;
}

// ---------------------------------------------------------------- Z2 smash product

namespace detail {

inline void require_degrees_at_most_two(const Algebra& l) {
  if (!l.graded()) fail(ErrorCode::NotGraded, "construction needs a graded algebra");
  if (l.top_degree() > 2) fail(ErrorCode::TopDegreeTooHigh, "construction needs degrees at most 2");
}

}  // namespace detail

// Basis b p_h at index h * dim + i; b p_g * c p_h = [deg c = g + h mod 2] bc p_h.
inline Algebra smash_z2(const Algebra& l) {
  detail::require_degrees_at_most_two(l);
  const Field f = l.field();
  const std::size_t n = l.dim();
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> units;
  std::vector<int> grading;
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(BasisLabel::smash(l.label(i), h));
      grading.push_back(l.degree(i));
    }
  for (std::size_t h = 0; h < 2; ++h)
    for (auto e : l.unit_idempotents()) units.push_back(h * n + e);
  auto product = [&](std::size_t x, std::size_t y) {
    std::size_t g = x / n, i = x % n, h = y / n, j = y % n;
    Vector out = zero_vector(f, 2 * n);
    if (static_cast<std::size_t>(l.degree(j) % 2) != (g + h) % 2) return out;
    for (const auto& t : l.product(i, j)) out[h * n + t.index] = t.coeff;
    return out;
  };
  return Algebra::from_products(f, std::move(labels), product, std::move(units), std::move(grading));
}

// The Z2 action (b p_h)^g = b p_{hg} on smash_z2(L).
inline GroupAction smash_z2_action(const AlgebraPtr& smash) {
  const std::size_t n = smash->dim() / 2;
  Matrix swap(smash->field(), 2 * n, 2 * n);
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t i = 0; i < n; ++i) swap(((h + 1) % 2) * n + i, h * n + i) = smash->field().one();
  GroupAction g;
  g.algebra = smash;
  g.elements = {"1", "g"};
  g.table = {{0, 1}, {1, 0}};
  g.automorphisms = {AlgebraMorphism::identity(smash), AlgebraMorphism{smash, smash, swap}};
  g.verify();
  return g;
}

// ---------------------------------------------------------------- matrix-shaped constructions

namespace detail {

struct MatrixSlot {
  std::size_t row, col, index;  // entry (row, col) holding basis element index
};

// Algebra on matrix entries with the usual matrix product, entries multiplied in L.
inline Algebra matrix_shaped(const Algebra& l, const std::vector<MatrixSlot>& slots) {
  const Field f = l.field();
  const std::size_t n = slots.size();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> where;
  std::vector<BasisLabel> labels;
  std::vector<int> grading;
  std::vector<std::size_t> units;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = slots[k];
    where[{s.row, s.col, s.index}] = k;
    labels.push_back(BasisLabel::matrix(s.row, s.col, l.label(s.index)));
    grading.push_back(l.degree(s.index));
  }
  for (std::size_t r = 0; r < 2; ++r)
    for (auto e : l.unit_idempotents()) units.push_back(where.at({r, r, e}));
  auto product = [&](std::size_t x, std::size_t y) {
    Vector out = zero_vector(f, n);
    const auto& a = slots[x];
    const auto& b = slots[y];
    if (a.col != b.row) return out;
    for (const auto& t : l.product(a.index, b.index)) {
      auto it = where.find({a.row, b.col, t.index});
      if (it == where.end()) fail(ErrorCode::InternalInconsistency, "matrix product leaves the block pattern");
      out[it->second] = t.coeff;
    }
    return out;
  };
  return Algebra::from_products(f, std::move(labels), product, std::move(units), std::move(grading));
}

}  // namespace detail

// [[L0 + L2, L1], [L1, L0 + L2]]: entry (r, c) holds the degrees congruent to c - r mod 2.
inline Algebra quasi_veronese2(const Algebra& l) {
  detail::require_degrees_at_most_two(l);
  std::vector<detail::MatrixSlot> slots;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < l.dim(); ++i)
        if (static_cast<std::size_t>(l.degree(i)) % 2 == (c + 2 - r) % 2) slots.push_back({r, c, i});
  return detail::matrix_shaped(l, slots);
}

// E_rc(b) -> b p_c from quasi_veronese2(L) to smash_z2(L).
inline AlgebraMorphism veronese_smash_iso(const AlgebraPtr& veronese, const AlgebraPtr& smash) {
  const std::size_t n = smash->dim() / 2;
  if (veronese->dim() != 2 * n) fail(ErrorCode::ShapeMismatch, "dimensions differ");
  std::vector<Vector> images;
  for (std::size_t k = 0; k < veronese->dim(); ++k) {
    const BasisLabel& v = veronese->label(k);
    auto target = smash->index_of(BasisLabel::smash(*v.inner, v.column));
    if (!target) fail(ErrorCode::VerificationFailed, "no smash basis element for " + v.to_string());
    images.push_back(smash->basis_vector(*target));
  }
  AlgebraMorphism phi{veronese, smash, Matrix::from_columns(smash->field(), smash->dim(), images)};
  verify_automorphism(phi, ErrorCode::VerificationFailed);
  return phi;
}

// [[L0, L1], [0, L0]]
inline Algebra beilinson(const Algebra& l) {
  if (!l.graded()) fail(ErrorCode::NotGraded, "construction needs a graded algebra");
  std::vector<detail::MatrixSlot> slots;
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.degree(i) == 0) slots.push_back({0, 0, i});
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.degree(i) == 1) slots.push_back({0, 1, i});
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (l.degree(i) == 0) slots.push_back({1, 1, i});
  // products of two degree-one entries never land in the block pattern: E01 * E01 = 0
  return detail::matrix_shaped(l, slots);
}

// ---------------------------------------------------------------- trivial extensions

struct TrivialExtension {
  AlgebraPtr algebra;
  BilinearForm form;                     // <(a, f), (b, g)> = f(b) + g(a) twisted as the product requires
  std::optional<AlgebraMorphism> nakayama;  // sigma-hat^{-1} for twisted extensions
};

namespace detail {

// A (+) DA with (a, f)(b, g) = (ab, a.g + f.sigma(b)), (a.f)(x) = f(xa), (f.a)(x) = f(ax).
inline TrivialExtension twisted_extension(const AlgebraPtr& a, const Matrix& sigma) {
  const Algebra& l = *a;
  const Field f = l.field();
  const std::size_t n = l.dim();
  std::vector<BasisLabel> labels = l.basis();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(BasisLabel::dual(l.label(i)));
  // coefficient of f_k in f_j . b_i is c_ik^j; in b_i . f_j it is c_ki^j
  auto product = [&](std::size_t x, std::size_t y) {
    Vector out = zero_vector(f, 2 * n);
    if (x < n && y < n) {
      for (const auto& t : l.product(x, y)) out[t.index] = t.coeff;
    } else if (x < n && y >= n) {
      std::size_t j = y - n;
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : l.product(k, x))
          if (t.index == j) out[n + k] += t.coeff;
    } else if (x >= n && y < n) {
      std::size_t j = x - n;
      Vector sb = sigma.column(y);
      for (std::size_t i = 0; i < n; ++i) {
        if (sb[i].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& t : l.product(i, k))
            if (t.index == j) out[n + k] += sb[i] * t.coeff;
      }
    }
    return out;
  };
  std::optional<std::vector<int>> grading;
  AlgebraMorphism sig{a, a, sigma};
  if (l.graded() && is_graded_map(sig)) {
    grading = *l.grading();
    const int top = l.top_degree();
    for (std::size_t i = 0; i < n; ++i) grading->push_back(top + 1 - l.degree(i));
  }
  auto out = share(Algebra::from_products(f, std::move(labels), product, l.unit_idempotents(), std::move(grading)));
  // t(a, f) = f(1)
  Vector t = out->zero();
  Vector one = l.one();
  for (std::size_t k = 0; k < n; ++k) t[n + k] = one[k];
  BilinearForm form = form_from_functional(out, t);
  return {out, std::move(form), std::nullopt};
}

}  // namespace detail

inline TrivialExtension trivial_extension(const AlgebraPtr& a) {
  return detail::twisted_extension(a, Matrix::identity(a->field(), a->dim()));
}

// Twisted right action on DA; the attached Nakayama automorphism is sigma^{-1} on A and f -> f o sigma on DA.
inline TrivialExtension twisted_trivial_extension(const AlgebraPtr& a, const AlgebraMorphism& sigma) {
  if (sigma.source.get() != a.get() || sigma.target.get() != a.get())
    fail(ErrorCode::NotAutomorphism, "twist is not an endomorphism of the algebra");
  verify_automorphism(sigma);
  TrivialExtension te = detail::twisted_extension(a, sigma.matrix);
  const std::size_t n = a->dim();
  Matrix sinv = *inverse(sigma.matrix);
  Matrix nu(a->field(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      nu(k, i) = sinv(k, i);
      // (f_j o sigma)(b_k) = sigma_{jk}
      nu(n + k, n + i) = sigma.matrix(i, k);
    }
  AlgebraMorphism hat{te.algebra, te.algebra, std::move(nu)};
  verify_automorphism(hat, ErrorCode::VerificationFailed);
  const Algebra& d = *te.algebra;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (!(te.form(d.basis_vector(i), d.basis_vector(j)) == te.form(d.basis_vector(j), hat.image(i))))
        fail(ErrorCode::VerificationFailed, "sigma-hat^{-1} violates the gram relation");
  te.nakayama = std::move(hat);
  return te;
}

// For sigma = conjugation by u, (a, f) -> (a, f.u) from the extension twisted by sigma o pi to the one
// twisted by pi (f.u is the untwisted right action).
inline AlgebraMorphism inner_twist_iso(const TrivialExtension& twisted_sp, const TrivialExtension& twisted_p,
                                       const Vector& u) {
  const Algebra& src = *twisted_sp.algebra;
  const std::size_t n = src.dim() / 2;
  const Field f = src.field();
  Matrix m(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      // f_j . b_i = sum_k c_ik^j f_k, with c taken from the A-block of the source
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : src.product(i, k))
          if (t.index == j) m(n + k, n + j) += u[i] * t.coeff;
    }
  AlgebraMorphism phi{twisted_sp.algebra, twisted_p.algebra, std::move(m)};
  verify_automorphism(phi, ErrorCode::VerificationFailed);
  return phi;
}

// ---------------------------------------------------------------- radical square zero

inline Quiver separated_quiver(const Algebra& a) {
  Subspace rad = radical(a);
  Subspace rad2 = detail::product_span(a, rad.basis(), rad.basis());
  if (rad2.dim() != 0) fail(ErrorCode::RadicalSquareNotZero, "separated quiver needs rad^2 = 0");
  auto counts = arrow_counts(a);
  std::vector<std::string> vertices;
  const std::size_t r = counts.size();
  for (std::size_t t = 0; t < r; ++t) vertices.push_back(vertex_name(a, t));
  for (std::size_t t = 0; t < r; ++t) vertices.push_back(vertex_name(a, t) + "'");
  std::vector<Arrow> arrows;
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t k = 0; k < counts[s][t]; ++k)
        arrows.push_back({vertices[s] + "->" + vertices[r + t] + "#" + std::to_string(k + 1), vertices[s], vertices[r + t]});
  return Quiver(std::move(vertices), std::move(arrows));
}

// ---------------------------------------------------------------- double

inline Algebra double_construction(const Algebra& l) {
  if (l.field().characteristic() == 2) fail(ErrorCode::CharTwo, "the double needs characteristic other than 2");
  auto smash = share(smash_z2(l));
  return skew_group_algebra(smash_z2_action(smash));
}

struct MoritaCheck {
  std::size_t basic_dim = 0;
  Quiver basic_quiver;
  Quiver input_quiver;
  bool quivers_match = false;
};

// Compares the quiver of the basic algebra of the double with the quiver of the input.
inline MoritaCheck double_morita_check(const Algebra& l, const Algebra& dbl) {
  MoritaCheck m;
  Algebra basic = basic_algebra(dbl);
  m.basic_dim = basic.dim();
  m.basic_quiver = quiver_of(basic);
  m.input_quiver = quiver_of(basic_algebra(l));
  m.quivers_match = quivers_isomorphic(m.basic_quiver, m.input_quiver);
  return m;
}

// ---------------------------------------------------------------- Veronese versus Beilinson

// Degree-preserving component of an endomorphism of a graded algebra.
inline AlgebraMorphism degree_zero_part(const AlgebraMorphism& f) {
  Matrix m = f.matrix;
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (f.target->degree(k) != f.source->degree(i)) m(k, i) = f.source->field().zero();
  return {f.source, f.target, std::move(m)};
}

// Entrywise action of a graded automorphism of L on beilinson(L).
inline AlgebraMorphism beilinson_action(const AlgebraPtr& nabla, const AlgebraMorphism& tau) {
  const Algebra& l = *tau.source;
  std::vector<Vector> images;
  for (std::size_t k = 0; k < nabla->dim(); ++k) {
    const BasisLabel& lab = nabla->label(k);
    auto src = l.index_of(*lab.inner);
    if (!src) fail(ErrorCode::InternalInconsistency, "Beilinson label without source element");
    Vector img = tau.image(*src);
    Vector out = nabla->zero();
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i].is_zero()) continue;
      auto at = nabla->index_of(BasisLabel::matrix(lab.index, lab.column, l.label(i)));
      if (!at) fail(ErrorCode::NotAutomorphism, "automorphism does not preserve degrees");
      out[*at] = img[i];
    }
    images.push_back(std::move(out));
  }
  AlgebraMorphism m{nabla, nabla, Matrix::from_columns(nabla->field(), nabla->dim(), images)};
  verify_automorphism(m);
  return m;
}

struct VeroneseIdentification {
  AlgebraPtr nabla;
  AlgebraMorphism twist;  // degree-0 part of nu^{-1} acting on the Beilinson algebra
  TrivialExtension extension;
  AlgebraPtr veronese;
  AlgebraMorphism iso;  // extension -> veronese
};

// For graded Frobenius L with socle in degree 2: the twisted trivial extension of the Beilinson algebra
// by nu^{-1} is isomorphic to quasi_veronese2(L), identity on the Beilinson part and dual to the
// trace pairing on the rest.
inline VeroneseIdentification veronese_as_trivial_extension(const AlgebraPtr& l, const BilinearForm& form) {
  detail::require_degrees_at_most_two(*l);
  AlgebraMorphism nu = nakayama_from_form(form);
  VeroneseIdentification v;
  v.nabla = share(beilinson(*l));
  v.twist = beilinson_action(v.nabla, degree_zero_part(nu.inverse()));
  v.extension = twisted_trivial_extension(v.nabla, v.twist);
  v.veronese = share(quasi_veronese2(*l));
  const Algebra& d = *v.extension.algebra;
  const Algebra& w = *v.veronese;
  const Field f = l->field();
  const std::size_t n = v.nabla->dim();
  if (w.dim() != d.dim()) fail(ErrorCode::ShapeMismatch, "dimensions differ");
  // T(E_rr(c)) = <1, c> on the diagonal, zero elsewhere
  Vector one = l->one();
  Vector T = w.zero();
  for (std::size_t k = 0; k < w.dim(); ++k) {
    const BasisLabel& lab = w.label(k);
    if (lab.index != lab.column) continue;
    T[k] = form(one, l->basis_vector(*l->index_of(*lab.inner)));
  }
  std::vector<Vector> images(d.dim());
  std::vector<std::size_t> complement;
  for (std::size_t k = 0; k < n; ++k) {
    const BasisLabel& lab = v.nabla->label(k);
    images[k] = w.basis_vector(*w.index_of(lab));
  }
  for (std::size_t k = 0; k < w.dim(); ++k) {
    const BasisLabel& lab = w.label(k);
    if (!v.nabla->index_of(lab)) complement.push_back(k);
  }
  if (complement.size() != n) fail(ErrorCode::ShapeMismatch, "Veronese complement has the wrong dimension");
  // pairing matrix P(x, c) = T(x c) for x in the Beilinson part and c in the complement
  Matrix p(f, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c) {
      Vector prod = w.multiply(images[x], w.basis_vector(complement[c]));
      Scalar s = f.zero();
      for (std::size_t k = 0; k < w.dim(); ++k)
        if (!prod[k].is_zero()) s += prod[k] * T[k];
      p(x, c) = s;
    }
  auto pinv = inverse(p);
  if (!pinv) fail(ErrorCode::VerificationFailed, "trace pairing between the blocks is degenerate");
  // dual element f_j corresponds to the complement vector y with T(x y) = delta_xj
  for (std::size_t j = 0; j < n; ++j) {
    Vector coeff = pinv->column(j);
    Vector y = w.zero();
    for (std::size_t c = 0; c < n; ++c) axpy(y, coeff[c], w.basis_vector(complement[c]));
    images[n + j] = std::move(y);
  }
  v.iso = AlgebraMorphism{v.extension.algebra, v.veronese, Matrix::from_columns(f, w.dim(), images)};
  verify_automorphism(v.iso, ErrorCode::VerificationFailed);
  return v;
}

}  // namespace qalg
