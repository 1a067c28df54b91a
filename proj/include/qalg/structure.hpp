#pragma once

// Radical and socle filtrations, quotients, connectivity, Gabriel quivers, idempotent
// truncations and basic idempotents, and the construction of algebras from presentations.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/poly.hpp"

namespace qalg {

// ---------------------------------------------------------------- radical and socle

namespace detail {

inline std::vector<std::size_t> descending_columns(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.rbegin(), order.rend(), 0);
  return order;
}

// span of {x*y : x in xs, y in ys}
inline Subspace product_span(const Algebra& a, const std::vector<Vector>& xs, const std::vector<Vector>& ys) {
  std::vector<Vector> prods;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Vector p = a.multiply(x, y);
      if (!is_zero(p)) prods.push_back(std::move(p));
    }
  return Subspace::span(a.field(), a.dim(), prods);
}

}  // namespace detail

// The Jacobson radical: positive-degree part for graded algebras, otherwise the span of the
// basis elements that are not unit idempotents, which must then be a nilpotent ideal.
inline Subspace radical(const Algebra& a) {
  std::vector<Vector> gens;
  if (a.graded()) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.degree(i) > 0) gens.push_back(a.basis_vector(i));
    return Subspace::span(a.field(), a.dim(), gens);
  }
  const auto& units = a.unit_idempotents();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::find(units.begin(), units.end(), i) == units.end()) gens.push_back(a.basis_vector(i));
  Subspace cand = Subspace::span(a.field(), a.dim(), gens);
  // two-sided ideal check, then nilpotency
  for (const auto& g : gens)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!cand.contains(a.multiply(g, a.basis_vector(j))) || !cand.contains(a.multiply(a.basis_vector(j), g)))
        fail(ErrorCode::NotNilpotentComplement, "span of the non-idempotent basis elements is not an ideal");
  Subspace power = cand;
  for (std::size_t step = 0; step <= a.dim() && power.dim() > 0; ++step)
    power = detail::product_span(a, power.basis(), gens);
  if (power.dim() > 0) fail(ErrorCode::NotNilpotentComplement, "span of the non-idempotent basis elements is not nilpotent");
  return cand;
}

// A = rad^0, rad, rad^2, ... down to the last nonzero power.
inline std::vector<Subspace> radical_layers(const Algebra& a) {
  std::vector<Subspace> layers;
  std::vector<Vector> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.basis_vector(i));
  layers.push_back(Subspace::span(a.field(), a.dim(), all));
  Subspace rad = radical(a);
  auto rad_basis = rad.basis();
  Subspace power = rad;
  while (power.dim() > 0) {
    if (layers.size() > a.dim() + 1) fail(ErrorCode::NotNilpotentComplement, "radical powers do not terminate");
    layers.push_back(power);
    power = detail::product_span(a, power.basis(), rad_basis);
  }
  return layers;
}

inline std::vector<std::size_t> layer_dims(const std::vector<Subspace>& layers) {
  std::vector<std::size_t> d;
  for (const auto& l : layers) d.push_back(l.dim());
  return d;
}

// Loewy length: least L with rad^L = 0.
inline std::size_t loewy_length(const Algebra& a) {
  auto layers = radical_layers(a);
  return a.dim() == 0 ? 0 : layers.size();
}

struct SocleData {
  Subspace two_sided;
  Subspace left;   // {x : rad * x = 0}
  Subspace right;  // {x : x * rad = 0}
  bool sides_agree() const { return left == right; }
};

inline SocleData socle_data(const Algebra& a) {
  auto rad = radical(a).basis();
  const std::size_t n = a.dim();
  std::vector<Vector> left_rows, right_rows;
  for (const auto& r : rad) {
    Matrix l = a.left_multiplication(r), rm = a.right_multiplication(r);
    for (std::size_t i = 0; i < n; ++i) {
      left_rows.push_back(l.row(i));
      right_rows.push_back(rm.row(i));
    }
  }
  auto kernel_of = [&](const std::vector<Vector>& rows) {
    if (rows.empty()) {
      std::vector<Vector> all;
      for (std::size_t i = 0; i < n; ++i) all.push_back(a.basis_vector(i));
      return Subspace::span(a.field(), n, all, detail::descending_columns(n));
    }
    return Subspace::span(a.field(), n, kernel(Matrix::from_rows(a.field(), n, rows)), detail::descending_columns(n));
  };
  std::vector<Vector> both = left_rows;
  both.insert(both.end(), right_rows.begin(), right_rows.end());
  return {kernel_of(both), kernel_of(left_rows), kernel_of(right_rows)};
}

inline Subspace socle(const Algebra& a) { return socle_data(a).two_sided; }

// ---------------------------------------------------------------- quotients

// A/I for a two-sided ideal I, on the basis elements that are not pivots of I (pivots are taken on the
// highest basis indices). Unit idempotents lying in I are dropped.
inline Algebra quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  Subspace I = Subspace::span(a.field(), n, ideal.basis(), detail::descending_columns(n));
  for (const auto& v : I.basis())
    for (std::size_t j = 0; j < n; ++j)
      if (!I.contains(a.multiply(v, a.basis_vector(j))) || !I.contains(a.multiply(a.basis_vector(j), v)))
        fail(ErrorCode::InvalidAlgebra, "quotient by a subspace that is not a two-sided ideal");
  std::vector<bool> pivot(n, false);
  for (auto p : I.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      position[i] = keep.size();
      keep.push_back(i);
    }
  std::vector<std::size_t> units;
  for (auto e : a.unit_idempotents()) {
    Vector r = I.reduce(a.basis_vector(e));
    if (is_zero(r)) continue;
    if (!(r == a.basis_vector(e))) fail(ErrorCode::InvalidAlgebra, "unit idempotent only partly inside the ideal");
    units.push_back(position[e]);
  }
  bool homogeneous = a.graded();
  if (homogeneous)
    for (const auto& v : I.basis()) {
      std::map<int, Vector> parts;
      for (std::size_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) {
          auto it = parts.try_emplace(a.degree(i), a.zero()).first;
          it->second[i] = v[i];
        }
      for (const auto& [d, part] : parts) homogeneous = homogeneous && I.contains(part);
    }
  std::vector<BasisLabel> labels;
  std::optional<std::vector<int>> grading;
  if (homogeneous) grading.emplace();
  for (auto i : keep) {
    labels.push_back(a.label(i));
    if (grading) grading->push_back(a.degree(i));
  }
  const Field f = a.field();
  Algebra q = Algebra::from_products(
      f, std::move(labels),
      [&](std::size_t i, std::size_t j) {
        Vector r = I.reduce(a.product_vector(keep[i], keep[j]));
        Vector out = zero_vector(f, keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) out[k] = r[keep[k]];
        return out;
      },
      units, grading);
  if (keep.empty()) q.add_notice("ZeroQuotient: the ideal is the whole algebra");
  return q;
}

inline Algebra quotient_by_socle(const Algebra& a) { return quotient_by_ideal(a, socle(a)); }

// ---------------------------------------------------------------- corners and connectivity

// span of x * A * y
inline Subspace corner(const Algebra& a, const Vector& x, const Vector& y) {
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Vector v = a.multiply(a.multiply(x, a.basis_vector(k)), y);
    if (!is_zero(v)) gens.push_back(std::move(v));
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

// span of x * S * y for a subspace S
inline Subspace corner_of(const Algebra& a, const Vector& x, const Subspace& s, const Vector& y) {
  std::vector<Vector> gens;
  for (const auto& b : s.basis()) {
    Vector v = a.multiply(a.multiply(x, b), y);
    if (!is_zero(v)) gens.push_back(std::move(v));
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

// Groups of unit idempotent positions linked by nonzero corners.
inline std::vector<std::vector<std::size_t>> connected_components(const Algebra& a) {
  const std::size_t r = a.unit_idempotents().size();
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = s + 1; t < r; ++t)
      if (corner(a, a.idempotent(s), a.idempotent(t)).dim() > 0 || corner(a, a.idempotent(t), a.idempotent(s)).dim() > 0)
        parent[find(s)] = find(t);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < r; ++s) groups[find(s)].push_back(s);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_connected(const Algebra& a) { return connected_components(a).size() <= 1; }

// ---------------------------------------------------------------- idempotent truncation

// The algebra eAe, e = sum of the given pairwise orthogonal idempotents, whose unit idempotents are
// exactly the given ones. Basis elements e_i b e_j are chosen greedily in basis order; an element equal
// to an original basis element keeps its label, others are labelled by their corner.
inline Algebra idempotent_truncation(const Algebra& a, const std::vector<Vector>& idems) {
  const Field f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < idems.size(); ++i)
    for (std::size_t j = 0; j < idems.size(); ++j) {
      Vector p = a.multiply(idems[i], idems[j]);
      if (i == j ? !(p == idems[i]) : !is_zero(p))
        fail(ErrorCode::NotIdempotent, "truncation needs pairwise orthogonal idempotents");
    }
  struct Chosen {
    std::size_t key;
    std::size_t order;
    Vector vec;
    BasisLabel label;
    bool unit;
    int degree;
  };
  std::vector<Chosen> chosen;
  auto leading = [&](const Vector& v) {
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) return k;
    return n;
  };
  auto as_basis = [&](const Vector& v) -> std::optional<std::size_t> {
    std::size_t k = leading(v);
    if (k < n && v == a.basis_vector(k)) return k;
    return std::nullopt;
  };
  bool homogeneous = a.graded();
  for (std::size_t i = 0; i < idems.size(); ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!idems[i][k].is_zero() && a.degree(k) != 0) homogeneous = false;
  for (std::size_t i = 0; i < idems.size(); ++i)
    for (std::size_t j = 0; j < idems.size(); ++j) {
      std::vector<Vector> span;
      auto accept = [&](Vector v, std::size_t key, BasisLabel label, bool unit, int degree) {
        std::vector<Vector> trial = span;
        trial.push_back(v);
        if (Subspace::span(f, n, trial).dim() != trial.size()) return;
        span.push_back(v);
        chosen.push_back({key, chosen.size(), std::move(v), std::move(label), unit, degree});
      };
      if (i == j) {
        const Vector& e = idems[i];
        auto b = as_basis(e);
        accept(e, leading(e), b ? a.label(*b) : BasisLabel::of_vertex("idem" + std::to_string(i)), true, 0);
      }
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = a.multiply(a.multiply(idems[i], a.basis_vector(k)), idems[j]);
        if (is_zero(v)) continue;
        BasisLabel label = v == a.basis_vector(k) ? a.label(k) : BasisLabel::matrix(i, j, a.label(k));
        accept(std::move(v), k, std::move(label), false, a.degree(k));
      }
    }
  std::stable_sort(chosen.begin(), chosen.end(), [](const Chosen& x, const Chosen& y) { return x.key < y.key; });
  std::vector<Vector> vecs;
  std::vector<BasisLabel> labels;
  std::vector<std::size_t> units;
  std::optional<std::vector<int>> grading;
  if (homogeneous) grading.emplace();
  // keep unit idempotents in the order of the given list
  std::vector<std::size_t> unit_pos(idems.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    vecs.push_back(chosen[c].vec);
    labels.push_back(chosen[c].label);
    if (grading) grading->push_back(chosen[c].degree);
  }
  for (std::size_t i = 0; i < idems.size(); ++i)
    for (std::size_t c = 0; c < chosen.size(); ++c)
      if (chosen[c].unit && chosen[c].vec == idems[i]) unit_pos[i] = c;
  units = unit_pos;
  Coordinatizer coords(f, n, vecs);
  Algebra out = Algebra::from_products(
      f, std::move(labels), [&](std::size_t i, std::size_t j) { return coords.coordinates(a.multiply(vecs[i], vecs[j])); },
      units, grading);
  return out;
}

// Truncation by a single idempotent. If it is a sum of unit idempotents those become the units of the
// result; otherwise the idempotent itself is the only unit idempotent.
inline Algebra idempotent_truncation(const Algebra& a, const Vector& eta) {
  if (!(a.multiply(eta, eta) == eta)) fail(ErrorCode::NotIdempotent, "element is not idempotent");
  std::vector<Vector> parts;
  Vector rest = eta;
  for (std::size_t t = 0; t < a.unit_idempotents().size(); ++t) {
    std::size_t e = a.unit_idempotents()[t];
    if (eta[e].is_one()) {
      parts.push_back(a.basis_vector(e));
      rest[e] = a.field().zero();
    }
  }
  if (!is_zero(rest) || parts.empty()) parts = {eta};
  return idempotent_truncation(a, parts);
}

// ---------------------------------------------------------------- semisimple splitting

namespace detail {

// Minimal polynomial of x inside the corner algebra with unit e (x = e x e).
inline Poly minimal_polynomial(const Algebra& a, const Vector& e, const Vector& x) {
  const Field f = a.field();
  std::vector<Vector> powers{e};
  Vector cur = e;
  for (std::size_t deg = 1; deg <= a.dim() + 1; ++deg) {
    cur = a.multiply(cur, x);
    Coordinatizer c(f, a.dim(), powers);
    if (auto coeffs = c.try_coordinates(cur)) {
      Poly m;
      for (const auto& s : *coeffs) m.push_back(-s);
      m.push_back(f.one());
      return m;
    }
    powers.push_back(cur);
  }
  fail(ErrorCode::InternalInconsistency, "minimal polynomial search did not terminate");
}

inline Vector eval_in(const Algebra& a, const Poly& p, const Vector& e, const Vector& x) {
  Vector acc = a.zero();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = a.multiply(acc, x);
    axpy(acc, p[i], e);
  }
  return acc;
}

// A proper nonzero idempotent inside the corner algebra eAe (A semisimple), if one can be found over
// the base field.
inline std::optional<Vector> split_corner(const Algebra& a, const Vector& e) {
  const Field f = a.field();
  Subspace c = corner(a, e, e);
  auto basis = c.basis();
  std::vector<Vector> cands;
  // central elements first: a split commutative semisimple algebra is k^m and every element splits
  std::vector<Vector> cond;
  for (const auto& b : basis) {
    std::vector<Vector> cols;
    for (const auto& v : basis) {
      Vector d = a.multiply(v, b);
      axpy(d, -f.one(), a.multiply(b, v));
      cols.push_back(std::move(d));
    }
    Matrix m = Matrix::from_columns(f, a.dim(), cols);
    for (std::size_t i = 0; i < a.dim(); ++i) cond.push_back(m.row(i));
  }
  if (!cond.empty())
    for (const auto& k : kernel(Matrix::from_rows(f, basis.size(), cond))) {
      Vector z = a.zero();
      for (std::size_t j = 0; j < basis.size(); ++j) axpy(z, k[j], basis[j]);
      cands.push_back(std::move(z));
    }
  for (const auto& b : basis) cands.push_back(b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) cands.push_back(add(basis[i], basis[j]));
  for (const auto& x : cands) {
    Poly m = minimal_polynomial(a, e, x);
    if (m.size() <= 2) continue;  // scalar multiple of e
    for (const auto& lambda : poly::roots(m)) {
      // split off the generalized eigenspace of lambda
      Poly h{f.one()};
      Poly g = m;
      while (true) {
        auto [q, r] = poly::divmod(g, poly::linear(lambda));
        if (!r.empty()) break;
        g = q;
        h = poly::mul(h, poly::linear(lambda));
      }
      if (g.size() > 1) {
        Poly v = poly::inverse_mod(g, h);
        Vector idem = eval_in(a, poly::mod(poly::mul(v, g), m), e, x);
        return idem;
      }
      // x - lambda is nilpotent in the corner; N = (x - lambda)^(k-1) squares to zero
      Poly nil = poly::divmod(h, poly::linear(lambda)).first;
      Vector nvec = eval_in(a, nil, e, x);
      // solve N y N = N for y in the corner; then yN is a proper idempotent
      std::vector<Vector> cols;
      for (const auto& b : basis) cols.push_back(a.multiply(a.multiply(nvec, b), nvec));
      Matrix m2 = Matrix::from_columns(f, a.dim(), cols);
      Matrix aug(f, a.dim(), basis.size() + 1);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) aug(i, j) = m2(i, j);
        aug(i, basis.size()) = nvec[i];
      }
      Echelon ech = rref(aug);
      if (!ech.pivots.empty() && ech.pivots.back() == basis.size()) continue;
      Vector y = a.zero();
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) axpy(y, ech.rows(r, basis.size()), basis[ech.pivots[r]]);
      return a.multiply(y, nvec);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Complete set of primitive orthogonal idempotents of a semisimple algebra, refining its unit
// idempotents. NotSplit if some corner cannot be split over the base field.
inline std::vector<Vector> primitive_idempotents(const Algebra& s) {
  std::vector<Vector> work, done;
  for (std::size_t t = s.unit_idempotents().size(); t-- > 0;) work.push_back(s.idempotent(t));
  while (!work.empty()) {
    Vector e = std::move(work.back());
    work.pop_back();
    if (corner(s, e, e).dim() == 1) {
      done.push_back(std::move(e));
      continue;
    }
    auto f = detail::split_corner(s, e);
    if (!f) fail(ErrorCode::NotSplit, "semisimple quotient does not split over " + s.field().to_string());
    Vector rest = e;
    axpy(rest, -s.field().one(), *f);
    work.push_back(std::move(rest));
    work.push_back(std::move(*f));
  }
  return done;
}

// Groups of primitive idempotents lying in the same simple block (f_i S f_j != 0).
inline std::vector<std::vector<std::size_t>> idempotent_blocks(const Algebra& s, const std::vector<Vector>& prims) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> used(prims.size(), false);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> block{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < prims.size(); ++j)
      if (!used[j] && corner(s, prims[i], prims[j]).dim() > 0) {
        block.push_back(j);
        used[j] = true;
      }
    blocks.push_back(block);
  }
  return blocks;
}

namespace detail {

// dim e_s (A/rad) e_t for all pairs of unit idempotents
inline std::vector<std::vector<std::size_t>> top_corner_dims(const Algebra& a, const Subspace& rad) {
  const std::size_t r = a.unit_idempotents().size();
  std::vector<std::vector<std::size_t>> d(r, std::vector<std::size_t>(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      d[s][t] = corner(a, a.idempotent(s), a.idempotent(t)).dim() -
                corner_of(a, a.idempotent(s), rad, a.idempotent(t)).dim();
  return d;
}

inline bool basic_split_by_units(const std::vector<std::vector<std::size_t>>& d) {
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t t = 0; t < d.size(); ++t)
      if (d[s][t] != (s == t ? 1u : 0u)) return false;
  return true;
}

inline std::vector<std::size_t> complement_indices(const Algebra& a, const Subspace& ideal) {
  Subspace I = Subspace::span(a.field(), a.dim(), ideal.basis(), descending_columns(a.dim()));
  std::vector<bool> pivot(a.dim(), false);
  for (auto p : I.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!pivot[i]) keep.push_back(i);
  return keep;
}

}  // namespace detail

// Lifts idempotents of A/rad (given by representatives in A) to pairwise orthogonal idempotents of A.
inline std::vector<Vector> lift_idempotents(const Algebra& a, const std::vector<Vector>& reps) {
  const Field f = a.field();
  std::vector<Vector> lifted;
  Vector used = a.zero();
  for (const auto& rep : reps) {
    Vector u = a.one();
    axpy(u, -f.one(), used);
    Vector x = a.multiply(a.multiply(u, rep), u);
    bool ok = false;
    for (int iter = 0; iter < 64; ++iter) {
      Vector x2 = a.multiply(x, x);
      if (x2 == x) {
        ok = true;
        break;
      }
      Vector x3 = a.multiply(x2, x);
      x = add(scale(x2, f.from_int(3)), scale(x3, f.from_int(-2)));
    }
    if (!ok) fail(ErrorCode::LiftDivergence, "idempotent lifting did not converge");
    used = add(used, x);
    lifted.push_back(std::move(x));
  }
  return lifted;
}

struct BasicIdempotent {
  std::vector<Vector> parts;  // pairwise orthogonal, one per simple block
  Vector eta;                 // their sum
  bool already_basic = false;
};

// Idempotent eta with eta A eta basic and meeting every block once.
inline BasicIdempotent basic_idempotent(const Algebra& a) {
  Subspace rad = radical(a);
  auto dims = detail::top_corner_dims(a, rad);
  BasicIdempotent out;
  out.eta = a.zero();
  if (detail::basic_split_by_units(dims)) {
    for (std::size_t t = 0; t < a.unit_idempotents().size(); ++t) out.parts.push_back(a.idempotent(t));
    out.eta = a.one();
    out.already_basic = true;
    return out;
  }
  Algebra top = quotient_by_ideal(a, rad);
  auto keep = detail::complement_indices(a, rad);
  auto prims = primitive_idempotents(top);
  std::vector<Vector> reps;
  for (const auto& block : idempotent_blocks(top, prims)) {
    Vector rep = a.zero();
    for (std::size_t k = 0; k < keep.size(); ++k) rep[keep[k]] = prims[block.front()][k];
    reps.push_back(std::move(rep));
  }
  out.parts = lift_idempotents(a, reps);
  for (const auto& p : out.parts) out.eta = add(out.eta, p);
  return out;
}

inline Algebra basic_algebra(const Algebra& a) {
  BasicIdempotent b = basic_idempotent(a);
  if (b.already_basic) return a;
  Algebra out = idempotent_truncation(a, b.parts);
  out.add_notice("basified: input was not basic; replaced by the idempotent truncation eta A eta (dim " +
                 std::to_string(out.dim()) + " of " + std::to_string(a.dim()) + ")");
  return out;
}

// ---------------------------------------------------------------- Gabriel quiver

inline std::string vertex_name(const Algebra& a, std::size_t t) {
  const BasisLabel& l = a.label(a.unit_idempotents()[t]);
  return l.kind == BasisLabel::Kind::Vertex ? l.vertex : l.to_string();
}

inline void require_basic_split(const Algebra& a, const Subspace& rad) {
  if (detail::basic_split_by_units(detail::top_corner_dims(a, rad))) return;
  auto prims = primitive_idempotents(quotient_by_ideal(a, rad));  // throws NotSplit
  (void)prims;
  fail(ErrorCode::NotBasic, "algebra is not basic with respect to its unit idempotents");
}

// counts[s][t] = dim e_s (rad/rad^2) e_t = number of arrows s -> t
inline std::vector<std::vector<std::size_t>> arrow_counts(const Algebra& a) {
  Subspace rad = radical(a);
  require_basic_split(a, rad);
  Subspace rad2 = detail::product_span(a, rad.basis(), rad.basis());
  const std::size_t r = a.unit_idempotents().size();
  std::vector<std::vector<std::size_t>> counts(r, std::vector<std::size_t>(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      counts[s][t] = corner_of(a, a.idempotent(s), rad, a.idempotent(t)).dim() -
                     corner_of(a, a.idempotent(s), rad2, a.idempotent(t)).dim();
  return counts;
}

inline Quiver quiver_of(const Algebra& a) {
  auto counts = arrow_counts(a);
  std::vector<std::string> vertices;
  for (std::size_t t = 0; t < counts.size(); ++t) vertices.push_back(vertex_name(a, t));
  std::vector<Arrow> arrows;
  for (std::size_t s = 0; s < counts.size(); ++s)
    for (std::size_t t = 0; t < counts.size(); ++t)
      for (std::size_t k = 0; k < counts[s][t]; ++k)
        arrows.push_back({vertices[s] + "->" + vertices[t] + "#" + std::to_string(k + 1), vertices[s], vertices[t]});
  return Quiver(std::move(vertices), std::move(arrows));
}

// ---------------------------------------------------------------- presentations

namespace detail {

struct PathRelation {
  std::size_t length = 0;
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms;
  std::size_t source = 0, target = 0;
};

// Replaces basis elements so that the socle is spanned by basis vectors (graded algebras only).
inline Algebra socle_adapted(const Algebra& a) {
  Subspace soc = socle(a);
  bool coordinate = true;
  for (const auto& row : soc.basis()) {
    std::size_t nz = 0;
    for (const auto& c : row) nz += !c.is_zero();
    coordinate = coordinate && nz == 1;
  }
  if (coordinate) return a;
  std::vector<Vector> parts;
  for (const auto& row : soc.basis()) {
    std::map<int, Vector> by_degree;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!row[i].is_zero()) by_degree.try_emplace(a.degree(i), a.zero()).first->second[i] = row[i];
    for (auto& [d, v] : by_degree) parts.push_back(v);
  }
  Subspace hs = Subspace::span(a.field(), a.dim(), parts, descending_columns(a.dim()));
  Matrix p = Matrix::identity(a.field(), a.dim());
  auto rows = hs.basis();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i) p(i, hs.pivots()[r]) = rows[r][i];
  return change_basis(a, p, a.basis(), a.grading());
}

}  // namespace detail

// kQ/(I + J^L) with basis: vertices, arrows, then for each length 2..L-1 the paths that are not leading
// terms of the relation ideal (leading = lexicographically largest in arrow order).
inline Algebra build_algebra(const Presentation& p) {
  const Quiver& q = p.quiver;
  const Field f = p.field;
  if (q.vertices().empty()) fail(ErrorCode::EmptyQuiver, "quiver has no vertices");
  if (p.truncate_radical < 2) fail(ErrorCode::InvalidAlgebra, "truncate_radical must be at least 2");
  const std::size_t L = static_cast<std::size_t>(p.truncate_radical);
  const auto& arrows = q.arrows();
  std::vector<std::size_t> src, tgt;
  for (const auto& ar : arrows) {
    src.push_back(q.vertex_index(ar.source));
    tgt.push_back(q.vertex_index(ar.target));
  }
  using Path = std::vector<std::size_t>;
  std::vector<std::vector<Path>> paths(L);
  for (std::size_t i = 0; i < arrows.size(); ++i) paths[1].push_back({i});
  for (std::size_t len = 2; len < L; ++len)
    for (const auto& pth : paths[len - 1])
      for (std::size_t b = 0; b < arrows.size(); ++b)
        if (src[b] == tgt[pth.back()]) {
          Path ext = pth;
          ext.push_back(b);
          paths[len].push_back(std::move(ext));
        }
  std::vector<std::map<Path, std::size_t>> path_index(L);
  for (std::size_t len = 1; len < L; ++len)
    for (std::size_t i = 0; i < paths[len].size(); ++i) path_index[len][paths[len][i]] = i;

  std::vector<detail::PathRelation> rels;
  for (const auto& rel : p.relations) {
    detail::PathRelation pr;
    std::map<Path, Scalar> combined;
    bool first = true;
    for (const auto& term : rel.terms) {
      if (!(term.coeff.field() == f)) fail(ErrorCode::FieldMismatch, "relation coefficient over the wrong field");
      if (term.path.empty()) fail(ErrorCode::InconsistentRelations, "relation term with an empty path");
      Path pth;
      for (const auto& name : term.path) {
        auto idx = q.arrow_index(name);
        if (!idx) fail(ErrorCode::InvalidQuiver, "relation uses unknown arrow '" + name + "'");
        if (!pth.empty() && src[*idx] != tgt[pth.back()])
          fail(ErrorCode::InvalidQuiver, "relation path is not composable at arrow '" + name + "'");
        pth.push_back(*idx);
      }
      if (first) {
        pr.length = pth.size();
        pr.source = src[pth.front()];
        pr.target = tgt[pth.back()];
        first = false;
      } else {
        if (pth.size() != pr.length) fail(ErrorCode::NonHomogeneousRelation, "relation mixes path lengths");
        if (src[pth.front()] != pr.source || tgt[pth.back()] != pr.target)
          fail(ErrorCode::NonParallelRelation, "relation paths are not parallel");
      }
      auto it = combined.try_emplace(pth, f.zero()).first;
      it->second += term.coeff;
    }
    for (auto& [pth, c] : combined)
      if (!c.is_zero()) pr.terms.emplace_back(pth, c);
    if (pr.terms.empty()) continue;
    if (pr.length < 2) fail(ErrorCode::InconsistentRelations, "relation forces a vertex or arrow to zero");
    if (pr.length >= L) continue;
    rels.push_back(std::move(pr));
  }

  // homogeneous components of the relation ideal
  std::vector<Subspace> ideal(L);
  for (std::size_t len = 2; len < L; ++len) {
    const std::size_t np = paths[len].size();
    std::vector<Vector> rows;
    auto ending_at = [&](std::size_t length, std::size_t v) {
      std::vector<Path> out;
      if (length == 0) return std::vector<Path>{Path{}};
      for (const auto& pth : paths[length])
        if (tgt[pth.back()] == v) out.push_back(pth);
      return out;
    };
    auto starting_at = [&](std::size_t length, std::size_t v) {
      std::vector<Path> out;
      if (length == 0) return std::vector<Path>{Path{}};
      for (const auto& pth : paths[length])
        if (src[pth.front()] == v) out.push_back(pth);
      return out;
    };
    for (const auto& r : rels) {
      if (r.length > len) continue;
      for (std::size_t pre = 0; pre + r.length <= len; ++pre) {
        std::size_t post = len - r.length - pre;
        for (const auto& u : ending_at(pre, r.source))
          for (const auto& v : starting_at(post, r.target)) {
            Vector row = zero_vector(f, np);
            for (const auto& [w, c] : r.terms) {
              Path full = u;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              row[path_index[len].at(full)] += c;
            }
            rows.push_back(std::move(row));
          }
      }
    }
    ideal[len] = Subspace::span(f, np, rows, detail::descending_columns(np));
  }

  // basis
  std::vector<BasisLabel> labels;
  std::vector<int> grading;
  std::vector<std::size_t> vertex_basis(q.vertices().size());
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    vertex_basis[v] = labels.size();
    labels.push_back(BasisLabel::of_vertex(q.vertices()[v]));
    grading.push_back(0);
  }
  struct Word {
    Path path;
    std::size_t length;
  };
  std::vector<Word> words(labels.size(), Word{{}, 0});
  std::vector<std::vector<std::size_t>> basis_of_path(L);  // path index -> basis index (or npos)
  const std::size_t npos = static_cast<std::size_t>(-1);
  for (std::size_t len = 1; len < L; ++len) {
    basis_of_path[len].assign(paths[len].size(), npos);
    std::vector<bool> pivot(paths[len].size(), false);
    if (len >= 2)
      for (auto pv : ideal[len].pivots()) pivot[pv] = true;
    for (std::size_t i = 0; i < paths[len].size(); ++i) {
      if (pivot[i]) continue;
      basis_of_path[len][i] = labels.size();
      std::vector<std::string> names;
      for (auto ai : paths[len][i]) names.push_back(arrows[ai].name);
      labels.push_back(BasisLabel::of_path(std::move(names)));
      grading.push_back(static_cast<int>(len));
      words.push_back({paths[len][i], len});
    }
  }
  const std::size_t n = labels.size();
  auto vertex_of_basis = [&](std::size_t i) -> std::optional<std::size_t> {
    if (i < q.vertices().size()) return i;
    return std::nullopt;
  };
  auto product = [&](std::size_t i, std::size_t j) {
    Vector out = zero_vector(f, n);
    auto vi = vertex_of_basis(i), vj = vertex_of_basis(j);
    if (vi && vj) {
      if (*vi == *vj) out[i] = f.one();
      return out;
    }
    if (vi) {
      if (src[words[j].path.front()] == *vi) out[j] = f.one();
      return out;
    }
    if (vj) {
      if (tgt[words[i].path.back()] == *vj) out[i] = f.one();
      return out;
    }
    const Path& a = words[i].path;
    const Path& b = words[j].path;
    if (tgt[a.back()] != src[b.front()]) return out;
    const std::size_t len = a.size() + b.size();
    if (len >= L) return out;
    Path full = a;
    full.insert(full.end(), b.begin(), b.end());
    Vector w = unit_vector(f, paths[len].size(), path_index[len].at(full));
    Vector r = ideal[len].reduce(w);
    for (std::size_t k = 0; k < r.size(); ++k)
      if (!r[k].is_zero()) out[basis_of_path[len][k]] = r[k];
    return out;
  };
  Algebra a = Algebra::from_products(f, std::move(labels), product, vertex_basis, std::move(grading));
  return detail::socle_adapted(a);
}

// ---------------------------------------------------------------- arrow-level maps

// Images of vertices and arrows; anything not mentioned is fixed.
struct ArrowMap {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::vector<std::pair<Scalar, std::string>>> arrows;
};

// Extends an arrow-level map multiplicatively to an endomorphism of an algebra whose basis labels are
// vertices and paths (as produced by build_algebra).
inline AlgebraMorphism morphism_from_arrow_map(const AlgebraPtr& a, const ArrowMap& m) {
  const Field f = a->field();
  const std::size_t n = a->dim();
  auto arrow_element = [&](const std::string& name) {
    auto idx = a->index_of(BasisLabel::of_path({name}));
    if (!idx) fail(ErrorCode::ShapeMismatch, "no basis element for arrow '" + name + "'");
    return a->basis_vector(*idx);
  };
  auto vertex_element = [&](const std::string& v) {
    auto idx = a->index_of(BasisLabel::of_vertex(v));
    if (!idx) fail(ErrorCode::ShapeMismatch, "no basis element for vertex '" + v + "'");
    return a->basis_vector(*idx);
  };
  for (const auto& [name, img] : m.arrows) arrow_element(name);
  std::vector<Vector> words, images;
  for (std::size_t i = 0; i < n; ++i) {
    const BasisLabel& l = a->label(i);
    if (l.kind == BasisLabel::Kind::Vertex) {
      words.push_back(a->basis_vector(i));
      auto it = m.vertices.find(l.vertex);
      images.push_back(vertex_element(it == m.vertices.end() ? l.vertex : it->second));
    } else if (l.kind == BasisLabel::Kind::Path) {
      Vector w = arrow_element(l.path.front());
      Vector img;
      for (std::size_t k = 0; k < l.path.size(); ++k) {
        const std::string& name = l.path[k];
        if (k) w = a->multiply(w, arrow_element(name));
        Vector im = a->zero();
        auto it = m.arrows.find(name);
        if (it == m.arrows.end()) {
          im = arrow_element(name);
        } else {
          for (const auto& [c, target] : it->second) axpy(im, c, arrow_element(target));
        }
        img = k ? a->multiply(img, im) : im;
      }
      words.push_back(std::move(w));
      images.push_back(std::move(img));
    } else {
      fail(ErrorCode::ShapeMismatch, "arrow-level maps need an algebra given by a quiver presentation");
    }
  }
  auto pinv = inverse(Matrix::from_columns(f, n, words));
  if (!pinv) fail(ErrorCode::ShapeMismatch, "path words do not form a basis");
  return {a, a, Matrix::from_columns(f, n, images) * *pinv};
}

}  // namespace qalg
