#pragma once

// Associative bilinear forms, Frobenius detection, Nakayama automorphisms, inner and outer
// automorphism tests, and arrow-level cycle invariants of automorphisms.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qalg/structure.hpp"

namespace qalg {

struct BilinearForm {
  AlgebraPtr algebra;
  Matrix gram;
  bool nondegenerate = false;

  Scalar operator()(const Vector& a, const Vector& b) const {
    Vector gb = gram.apply(b);
    Scalar s = algebra->field().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) s += a[i] * gb[i];
    return s;
  }
};

// <a, b> = t(ab) for a linear functional t given by its values on the basis.
inline BilinearForm form_from_functional(const AlgebraPtr& a, const Vector& t) {
  const std::size_t n = a->dim();
  Matrix g(a->field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& term : a->product(i, j))
        if (!t[term.index].is_zero()) g(i, j) += term.coeff * t[term.index];
  bool nd = !determinant(g).is_zero();
  return {a, std::move(g), nd};
}

inline bool is_associative(const BilinearForm& b) {
  const Algebra& a = *b.algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!(b(a.product_vector(i, j), a.basis_vector(k)) == b(a.basis_vector(i), a.product_vector(j, k)))) return false;
  return true;
}

// Basis indices spanning the socle; fails if the socle is not spanned by basis vectors.
inline std::vector<std::size_t> socle_indices(const Algebra& a) {
  std::vector<std::size_t> out;
  for (const auto& row : socle(a).basis()) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) {
        ++nz;
        at = i;
      }
    if (nz != 1) fail(ErrorCode::SocleBasisNotInBasis, "socle is not spanned by basis elements");
    out.push_back(at);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// tr is 1 on the socle basis elements and 0 on the rest of the basis; <a, b> = tr(ab).
inline BilinearForm trace_form(const AlgebraPtr& a) {
  Vector t = a->zero();
  for (auto i : socle_indices(*a)) t[i] = a->field().one();
  return form_from_functional(a, t);
}

struct FrobeniusSearch {
  std::optional<BilinearForm> form;
  bool proven = false;  // for a failed search: every functional was ruled out
  std::size_t tried = 0;
  std::string method;
};

namespace detail {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, std::int64_t range) {
  if (f.kind() == FieldKind::Prime) return f.from_int(static_cast<std::int64_t>(rng() % f.characteristic()));
  std::uniform_int_distribution<std::int64_t> d(-range, range);
  return f.from_int(d(rng));
}

// Enumerates {0..m-1}^d in lexicographic order; returns false when exhausted.
inline bool next_point(std::vector<std::uint64_t>& p, std::uint64_t m) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (++p[i] < m) return true;
    p[i] = 0;
  }
  return false;
}

inline double grid_size(std::uint64_t m, std::size_t d) {
  double s = 1;
  for (std::size_t i = 0; i < d; ++i) s *= static_cast<double>(m);
  return s;
}

}  // namespace detail

// Nondegenerate associative form, tried in order: trace form, functionals on the left socle with
// deterministic then random coefficients, finally an exhaustive grid that proves absence when small.
inline FrobeniusSearch find_frobenius_form(const AlgebraPtr& a, std::size_t attempts = 64, std::uint64_t seed = 0) {
  FrobeniusSearch out;
  const Field f = a->field();
  const std::size_t n = a->dim();
  try {
    BilinearForm tr = trace_form(a);
    ++out.tried;
    if (tr.nondegenerate) {
      out.form = std::move(tr);
      out.method = "trace form";
      return out;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SocleBasisNotInBasis) throw;
  }
  // nondegeneracy of t(ab) only depends on t restricted to the left socle
  Subspace left = socle_data(*a).left;
  const std::size_t m = left.dim();
  auto functional = [&](const std::vector<Scalar>& c) {
    Vector t = a->zero();
    for (std::size_t r = 0; r < m; ++r) t[left.pivots()[r]] = c[r];
    return t;
  };
  auto attempt = [&](const std::vector<Scalar>& c, const char* how) {
    ++out.tried;
    BilinearForm b = form_from_functional(a, functional(c));
    if (!b.nondegenerate) return false;
    out.form = std::move(b);
    out.method = how;
    return true;
  };
  if (attempt(std::vector<Scalar>(m, f.one()), "functional with unit coefficients on the left socle")) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < attempts; ++k) {
    std::vector<Scalar> c;
    for (std::size_t r = 0; r < m; ++r) c.push_back(detail::random_scalar(f, rng, 1000));
    if (attempt(c, "random functional on the left socle")) return out;
  }
  // det of the gram matrix has degree <= n in each coefficient, so a grid with n+1 values per
  // coordinate decides it; over a small prime field the full space is searched instead
  std::uint64_t values = n + 1;
  if (f.kind() == FieldKind::Prime) values = std::min<std::uint64_t>(values, f.characteristic());
  if (detail::grid_size(values, m) * static_cast<double>(n * n * n) <= 5e7) {
    std::vector<std::uint64_t> p(m, 0);
    do {
      std::vector<Scalar> c;
      for (auto v : p) c.push_back(f.from_int(static_cast<std::int64_t>(v)));
      if (attempt(c, "grid search on the left socle")) return out;
    } while (detail::next_point(p, values));
    out.proven = true;
    out.method = "exhaustive grid: no nondegenerate associative form exists";
    return out;
  }
  out.method = "no nondegenerate form found after " + std::to_string(out.tried) +
               " functionals (semi-decision: the algebra is probably not Frobenius)";
  return out;
}

// The automorphism nu with <a, b> = <b, nu(a)>, i.e. matrix G^{-1} G^T.
inline AlgebraMorphism nakayama_from_form(const BilinearForm& b) {
  auto ginv = inverse(b.gram);
  if (!ginv) fail(ErrorCode::DegenerateForm, "form is degenerate");
  AlgebraMorphism nu{b.algebra, b.algebra, *ginv * b.gram.transpose()};
  verify_automorphism(nu, ErrorCode::NotMultiplicative);
  const Algebra& a = *b.algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(b(a.basis_vector(i), a.basis_vector(j)) == b(a.basis_vector(j), nu.image(i))))
        fail(ErrorCode::VerificationFailed, "gram relation fails for the computed Nakayama automorphism");
  return nu;
}

// ---------------------------------------------------------------- inner automorphisms

enum class InnerKind { Witness, NotInner, Undecided };

struct InnerResult {
  InnerKind kind = InnerKind::Undecided;
  Vector witness;  // u with sigma(a) = u a u^{-1}
  std::string reason;
  bool inner() const { return kind == InnerKind::Witness; }
};

inline std::string to_string(InnerKind k) {
  switch (k) {
    case InnerKind::Witness: return "Witness";
    case InnerKind::NotInner: return "NotInner";
    case InnerKind::Undecided: return "Undecided";
  }
  return "?";
}

namespace detail {

inline std::optional<Vector> unit_inverse(const Algebra& a, const Vector& u) {
  auto inv = inverse(a.left_multiplication(u));
  if (!inv) return std::nullopt;
  return inv->apply(a.one());
}

inline bool conjugates(const Algebra& a, const AlgebraMorphism& sigma, const Vector& u) {
  auto uinv = unit_inverse(a, u);
  if (!uinv) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(sigma.image(i) == a.multiply(a.multiply(u, a.basis_vector(i)), *uinv))) return false;
  return true;
}

}  // namespace detail

// sigma is inner iff U = {u : sigma(a) u = u a for all a} contains a unit.
inline InnerResult is_inner(const AlgebraMorphism& sigma, std::uint64_t seed = 0) {
  const Algebra& a = *sigma.source;
  if (sigma.source.get() != sigma.target.get()) fail(ErrorCode::NotAutomorphism, "not an endomorphism");
  verify_automorphism(sigma);
  const Field f = a.field();
  const std::size_t n = a.dim();
  InnerResult res;
  if (sigma.is_identity()) {
    res.kind = InnerKind::Witness;
    res.witness = a.one();
    res.reason = "identity";
    return res;
  }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m = a.left_multiplication(sigma.image(i));
    Matrix r = a.right_multiplication(a.basis_vector(i));
    for (std::size_t k = 0; k < n; ++k) {
      Vector row = m.row(k);
      axpy(row, -f.one(), r.row(k));
      rows.push_back(std::move(row));
    }
  }
  std::vector<Vector> U = kernel(Matrix::from_rows(f, n, rows));
  const std::size_t d = U.size();
  if (d == 0) {
    res.kind = InnerKind::NotInner;
    res.reason = "no nonzero u with sigma(a) u = u a";
    return res;
  }
  auto combo = [&](const std::vector<Scalar>& t) {
    Vector u = a.zero();
    for (std::size_t j = 0; j < d; ++j) axpy(u, t[j], U[j]);
    return u;
  };
  auto accept = [&](const std::vector<Scalar>& t, const std::string& how) {
    Vector u = combo(t);
    if (!detail::conjugates(a, sigma, u)) return false;
    res.kind = InnerKind::Witness;
    res.witness = std::move(u);
    res.reason = how;
    return true;
  };

  Subspace rad = radical(a);
  if (detail::basic_split_by_units(detail::top_corner_dims(a, rad))) {
    // u is a unit iff its coefficient on every vertex idempotent is nonzero
    const auto& units = a.unit_idempotents();
    std::vector<std::vector<Scalar>> forms;
    for (auto e : units) {
      std::vector<Scalar> l;
      bool zero = true;
      for (std::size_t j = 0; j < d; ++j) {
        l.push_back(U[j][e]);
        zero = zero && U[j][e].is_zero();
      }
      if (zero) {
        res.kind = InnerKind::NotInner;
        res.reason = "every solution u vanishes at vertex " + vertex_name(a, &e - &units[0]) + " modulo the radical";
        return res;
      }
      forms.push_back(std::move(l));
    }
    // points on the moment curve (1, X, X^2, ...) avoid the finitely many roots of each form
    const std::uint64_t span = d * forms.size() + 1;
    const std::uint64_t limit = f.kind() == FieldKind::Prime ? std::min<std::uint64_t>(span, f.characteristic()) : span;
    for (std::uint64_t x = 0; x < limit; ++x) {
      std::vector<Scalar> t;
      Scalar p = f.one();
      for (std::size_t j = 0; j < d; ++j) {
        t.push_back(p);
        p *= f.from_int(static_cast<std::int64_t>(x));
      }
      if (accept(t, "unit found on the moment curve of the centralizer space")) return res;
    }
    if (f.kind() == FieldKind::Prime && detail::grid_size(f.characteristic(), d) <= 2e5) {
      std::vector<std::uint64_t> p(d, 0);
      do {
        std::vector<Scalar> t;
        for (auto v : p) t.push_back(f.from_int(static_cast<std::int64_t>(v)));
        if (accept(t, "exhaustive search over the centralizer space")) return res;
      } while (detail::next_point(p, f.characteristic()));
      res.kind = InnerKind::NotInner;
      res.reason = "exhaustive search: no unit in the centralizer space";
      return res;
    }
  }

  // general path: deterministic grid, then random points, then a proof grid when small
  {
    std::vector<std::uint64_t> p(d, 0);
    std::uint64_t values = 5;
    if (detail::grid_size(values, d) <= 4000) {
      do {
        std::vector<Scalar> t;
        for (auto v : p) t.push_back(f.from_int(static_cast<std::int64_t>(v) - 2));
        if (accept(t, "unit found on the grid {-2..2}")) return res;
      } while (detail::next_point(p, values));
    }
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 64; ++k) {
    std::vector<Scalar> t;
    for (std::size_t j = 0; j < d; ++j) t.push_back(detail::random_scalar(f, rng, 1000));
    if (accept(t, "unit found by random sampling")) return res;
  }
  std::uint64_t values = n + 1;
  if (f.kind() == FieldKind::Prime) values = std::min<std::uint64_t>(values, f.characteristic());
  if (detail::grid_size(values, d) * static_cast<double>(n * n * n) <= 5e7) {
    std::vector<std::uint64_t> p(d, 0);
    do {
      std::vector<Scalar> t;
      for (auto v : p) t.push_back(f.from_int(static_cast<std::int64_t>(v)));
      if (accept(t, "unit found on the proof grid")) return res;
    } while (detail::next_point(p, values));
    res.kind = InnerKind::NotInner;
    res.reason = "determinant of left multiplication vanishes on a grid that decides it";
    return res;
  }
  res.kind = InnerKind::Undecided;
  res.reason = "no unit found in a " + std::to_string(d) + "-dimensional centralizer space";
  return res;
}

// ---------------------------------------------------------------- orders

inline Order automorphism_order(const AlgebraMorphism& sigma, std::uint64_t bound) {
  Matrix p = sigma.matrix;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (p.is_identity()) return Order::finite(n);
    p = p * sigma.matrix;
  }
  return Order::exceeds();
}

// Permutation of the unit idempotents induced modulo the radical, if sigma permutes them.
inline std::optional<std::vector<std::size_t>> vertex_permutation(const AlgebraMorphism& sigma) {
  const Algebra& a = *sigma.source;
  const auto& units = a.unit_idempotents();
  std::vector<std::size_t> perm;
  for (std::size_t s = 0; s < units.size(); ++s) {
    Vector img = sigma.image(units[s]);
    std::optional<std::size_t> hit;
    for (std::size_t t = 0; t < units.size(); ++t) {
      const Scalar& c = img[units[t]];
      if (c.is_zero()) continue;
      if (!c.is_one() || hit) return std::nullopt;
      hit = t;
    }
    if (!hit) return std::nullopt;
    perm.push_back(*hit);
  }
  return perm;
}

struct SignedArrow {
  std::size_t arrow;  // position in CycleInvariants::arrows
  int sign;           // +1 traversed along the arrow, -1 against it
};

struct CycleInvariants {
  std::vector<std::size_t> vertex_perm;
  std::vector<std::size_t> arrows;       // basis indices of the arrows (degree-1 basis elements)
  std::vector<std::size_t> arrow_perm;   // sigma(arrows[i]) = weights[i] * arrows[arrow_perm[i]] modulo rad^2
  std::vector<Scalar> weights;
  std::uint64_t permutation_order = 1;  // n0
  std::vector<std::vector<SignedArrow>> cycles;
  std::vector<Scalar> products;  // product of sigma^{n0} weights around each cycle
  std::vector<std::optional<std::uint64_t>> orders;
};

inline CycleInvariants cycle_invariants(const AlgebraMorphism& sigma) {
  const Algebra& a = *sigma.source;
  if (!a.graded()) fail(ErrorCode::NotGraded, "cycle invariants need a graded algebra");
  CycleInvariants ci;
  auto vp = vertex_permutation(sigma);
  if (!vp) fail(ErrorCode::MonomialActionRequired, "automorphism does not permute the vertices");
  ci.vertex_perm = *vp;
  const auto& units = a.unit_idempotents();
  const std::size_t r = units.size();
  std::vector<std::size_t> src, tgt;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.degree(i) != 1) continue;
    std::optional<std::size_t> s, t;
    for (std::size_t v = 0; v < r; ++v) {
      if (!is_zero(a.multiply(a.idempotent(v), a.basis_vector(i)))) {
        if (s) fail(ErrorCode::MonomialActionRequired, "degree-one basis element spans several corners");
        s = v;
      }
      if (!is_zero(a.multiply(a.basis_vector(i), a.idempotent(v)))) {
        if (t) fail(ErrorCode::MonomialActionRequired, "degree-one basis element spans several corners");
        t = v;
      }
    }
    if (!s || !t) fail(ErrorCode::MonomialActionRequired, "degree-one basis element outside every corner");
    ci.arrows.push_back(i);
    src.push_back(*s);
    tgt.push_back(*t);
  }
  // degree-one part must be a complement of rad^2 in rad
  Subspace rad = radical(a);
  Subspace rad2 = detail::product_span(a, rad.basis(), rad.basis());
  if (rad.dim() - rad2.dim() != ci.arrows.size())
    fail(ErrorCode::NotGraded, "degree-one part is not a space of arrows");
  std::vector<std::size_t> arrow_pos(a.dim(), a.dim());
  for (std::size_t k = 0; k < ci.arrows.size(); ++k) arrow_pos[ci.arrows[k]] = k;
  for (std::size_t k = 0; k < ci.arrows.size(); ++k) {
    Vector img = sigma.image(ci.arrows[k]);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (img[i].is_zero() || a.degree(i) != 1) continue;
      if (hit) fail(ErrorCode::MonomialActionRequired, "an arrow is not sent to a multiple of a single arrow");
      hit = arrow_pos[i];
    }
    if (!hit) fail(ErrorCode::MonomialActionRequired, "an arrow is sent into rad^2");
    ci.arrow_perm.push_back(*hit);
    ci.weights.push_back(img[ci.arrows[*hit]]);
  }
  // order of the permutation part
  auto cycle_len = [](const std::vector<std::size_t>& perm, std::size_t start) {
    std::uint64_t len = 1;
    for (std::size_t x = perm[start]; x != start; x = perm[x]) ++len;
    return len;
  };
  std::uint64_t n0 = 1;
  for (std::size_t v = 0; v < r; ++v) n0 = std::lcm(n0, cycle_len(ci.vertex_perm, v));
  for (std::size_t k = 0; k < ci.arrows.size(); ++k) n0 = std::lcm(n0, cycle_len(ci.arrow_perm, k));
  ci.permutation_order = n0;
  // sigma^{n0}(alpha) = W(alpha) alpha
  std::vector<Scalar> big;
  for (std::size_t k = 0; k < ci.arrows.size(); ++k) {
    Scalar w = a.field().one();
    std::size_t cur = k;
    for (std::uint64_t j = 0; j < n0; ++j) {
      w *= ci.weights[cur];
      cur = ci.arrow_perm[cur];
    }
    big.push_back(w);
  }
  // spanning forest by breadth-first search; each non-tree arrow closes one basis cycle
  std::vector<std::optional<SignedArrow>> via(r);
  std::vector<std::size_t> parent(r, r), depth(r, 0);
  std::vector<bool> seen(r, false), tree(ci.arrows.size(), false);
  for (std::size_t root = 0; root < r; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t v = queue[qi];
      for (std::size_t k = 0; k < ci.arrows.size(); ++k) {
        if (src[k] == tgt[k]) continue;
        std::size_t w;
        int sign;
        if (src[k] == v && !seen[tgt[k]]) {
          w = tgt[k];
          sign = 1;
        } else if (tgt[k] == v && !seen[src[k]]) {
          w = src[k];
          sign = -1;
        } else {
          continue;
        }
        seen[w] = true;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        via[w] = SignedArrow{k, sign};  // step from parent to w
        tree[k] = true;
        queue.push_back(w);
      }
    }
  }
  auto path_to_root = [&](std::size_t v) {
    std::vector<SignedArrow> steps;  // steps from v up to the root, each reversed
    while (parent[v] != r) {
      steps.push_back({via[v]->arrow, -via[v]->sign});
      v = parent[v];
    }
    return steps;
  };
  for (std::size_t k = 0; k < ci.arrows.size(); ++k) {
    if (tree[k]) continue;
    // cycle: arrow k from s to t, then from t back to s through the tree
    std::vector<SignedArrow> cyc{{k, 1}};
    auto up_t = path_to_root(tgt[k]);
    auto up_s = path_to_root(src[k]);
    // drop the common part near the root
    while (!up_t.empty() && !up_s.empty() && up_t.back().arrow == up_s.back().arrow) {
      up_t.pop_back();
      up_s.pop_back();
    }
    for (const auto& st : up_t) cyc.push_back(st);
    for (auto it = up_s.rbegin(); it != up_s.rend(); ++it) cyc.push_back({it->arrow, -it->sign});
    Scalar prod = a.field().one();
    for (const auto& st : cyc) prod *= st.sign > 0 ? big[st.arrow] : big[st.arrow].inverse();
    ci.cycles.push_back(std::move(cyc));
    ci.orders.push_back(is_root_of_unity(prod));
    ci.products.push_back(std::move(prod));
  }
  return ci;
}

struct OuterOrder {
  Order order;
  std::string method;
  std::vector<std::string> notes;
  std::optional<Vector> witness;  // u with sigma^n = conjugation by u
};

inline OuterOrder outer_order(const AlgebraMorphism& sigma, std::uint64_t bound, std::uint64_t seed = 0) {
  OuterOrder out;
  auto search = [&](const std::vector<std::uint64_t>& candidates) -> bool {
    for (auto n : candidates) {
      InnerResult r = is_inner(sigma.power(n), seed);
      if (r.kind == InnerKind::Undecided) out.notes.push_back("inner test undecided for power " + std::to_string(n));
      if (r.inner()) {
        out.order = Order::finite(n);
        out.witness = r.witness;
        return true;
      }
    }
    return false;
  };
  try {
    CycleInvariants ci = cycle_invariants(sigma);
    for (std::size_t c = 0; c < ci.products.size(); ++c)
      if (!ci.orders[c]) {
        out.order = Order::infinite();
        out.method = "cycle invariants";
        out.notes.push_back("cycle product " + ci.products[c].to_string() + " is not a root of unity");
        return out;
      }
    std::uint64_t N = ci.permutation_order;
    for (const auto& o : ci.orders) N = std::lcm(N, *o);
    out.method = "cycle invariants";
    out.notes.push_back("candidate order " + std::to_string(N) + " from permutation order " +
                        std::to_string(ci.permutation_order) + " and cycle products");
    if (search(::qalg::detail::divisors(N))) return out;
    out.notes.push_back("power " + std::to_string(N) + " is not inner; falling back to bounded search");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MonomialActionRequired && e.code() != ErrorCode::NotGraded) throw;
    out.notes.push_back(std::string("cycle invariants unavailable: ") + e.what());
  }
  out.method = "bounded search";
  std::vector<std::uint64_t> all;
  for (std::uint64_t n = 1; n <= bound; ++n) all.push_back(n);
  if (search(all)) return out;
  out.order = Order::exceeds();
  return out;
}

// ---------------------------------------------------------------- symmetry

struct SymmetryResult {
  bool frobenius = false;
  bool symmetric = false;
  std::optional<BilinearForm> form;
  std::optional<AlgebraMorphism> nakayama;
  InnerResult inner;
  std::string reason;
};

inline SymmetryResult is_symmetric(const AlgebraPtr& a, std::size_t attempts = 64, std::uint64_t seed = 0) {
  SymmetryResult res;
  FrobeniusSearch fs = find_frobenius_form(a, attempts, seed);
  if (!fs.form) {
    res.reason = "not Frobenius: " + fs.method;
    return res;
  }
  res.frobenius = true;
  res.form = fs.form;
  res.nakayama = nakayama_from_form(*fs.form);
  res.inner = is_inner(*res.nakayama, seed);
  res.symmetric = res.inner.inner();
  res.reason = "Nakayama automorphism: " + to_string(res.inner.kind) + " (" + res.inner.reason + ")";
  return res;
}

// True iff the Nakayama automorphism fixes every vertex.
inline bool is_weakly_symmetric(const AlgebraMorphism& nu) {
  auto p = vertex_permutation(nu);
  if (!p) return false;
  for (std::size_t i = 0; i < p->size(); ++i)
    if ((*p)[i] != i) return false;
  return true;
}

// phi^{-1} nu phi for an isomorphism phi: L -> G and an automorphism nu of G.
inline AlgebraMorphism transfer_nakayama(const AlgebraMorphism& phi, const AlgebraMorphism& nu) {
  if (phi.target->dim() != nu.source->dim()) fail(ErrorCode::ShapeMismatch, "phi does not land in the domain of nu");
  AlgebraMorphism inv = phi.inverse();
  AlgebraMorphism out = inv.after(nu.after(phi));
  out.source = phi.source;
  out.target = phi.source;
  verify_automorphism(out);
  return out;
}

}  // namespace qalg
