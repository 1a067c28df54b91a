#pragma once

// Graph types through the Tits form, the type of a radical-cube-zero self-injective algebra, and the
// decision procedure for finite generation of Hochschild cohomology (Fg).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qalg/constructions.hpp"

namespace qalg {

struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::size_t>> mult;  // symmetric; diagonal entries count loops

  std::size_t size() const { return vertices.size(); }

  static UndirectedGraph with_vertices(std::size_t n) {
    UndirectedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i + 1));
    g.mult.assign(n, std::vector<std::size_t>(n, 0));
    return g;
  }

  void add_edge(std::size_t i, std::size_t j, std::size_t times = 1) {
    mult[i][j] += times;
    if (i != j) mult[j][i] += times;
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < size(); ++w)
      if (w != v) d += mult[v][w];
    return d;
  }

  bool has_loop() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (mult[i][i]) return true;
    return false;
  }

  std::vector<std::vector<std::size_t>> components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s}, members;
      comp[s] = static_cast<int>(out.size());
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (std::size_t w = 0; w < size(); ++w)
          if (mult[v][w] && comp[w] < 0) {
            comp[w] = comp[s];
            stack.push_back(w);
          }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  UndirectedGraph induced(const std::vector<std::size_t>& keep) const {
    UndirectedGraph g;
    for (auto v : keep) g.vertices.push_back(vertices[v]);
    g.mult.assign(keep.size(), std::vector<std::size_t>(keep.size(), 0));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) g.mult[i][j] = mult[keep[i]][keep[j]];
    return g;
  }

  UndirectedGraph permuted(const std::vector<std::size_t>& perm) const {
    UndirectedGraph g = *this;
    for (std::size_t i = 0; i < size(); ++i) {
      g.vertices[perm[i]] = vertices[i];
      for (std::size_t j = 0; j < size(); ++j) g.mult[perm[i]][perm[j]] = mult[i][j];
    }
    return g;
  }
};

inline UndirectedGraph underlying_graph(const Quiver& q) {
  UndirectedGraph g;
  g.vertices = q.vertices();
  g.mult.assign(q.vertices().size(), std::vector<std::size_t>(q.vertices().size(), 0));
  for (const auto& a : q.arrows()) g.add_edge(q.vertex_index(a.source), q.vertex_index(a.target));
  return g;
}

inline Matrix tits_matrix(const UndirectedGraph& g) {
  if (g.has_loop()) fail(ErrorCode::LoopPresent, "Tits form is only defined here for loop-free graphs");
  Field q;
  Matrix m(q, g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      m(i, j) = i == j ? q.from_int(2) : q.from_int(-static_cast<std::int64_t>(g.mult[i][j]));
  return m;
}

enum class GraphFamily { Dynkin, ExtendedDynkin, Other };

struct GraphType {
  GraphFamily family = GraphFamily::Other;
  std::string name;                  // "A5", "~A3", "E6", ... empty for Other
  std::vector<Scalar> pivots;        // D of the pivoted LDL^T, in elimination order
  std::size_t kernel_dim = 0;
  std::vector<std::int64_t> kernel;  // positive integer kernel vector for extended Dynkin graphs
  std::string definiteness;          // "positive definite", "positive semidefinite", "indefinite"

  std::string label() const {
    switch (family) {
      case GraphFamily::Dynkin: return "Dynkin(" + name + ")";
      case GraphFamily::ExtendedDynkin: return "ExtendedDynkin(" + name + ")";
      case GraphFamily::Other: return "Other";
    }
    return "Other";
  }
  bool is_affine_a() const { return family == GraphFamily::ExtendedDynkin && name.rfind("~A", 0) == 0; }
};

namespace detail {

struct Definiteness {
  std::vector<Scalar> pivots;
  bool indefinite = false;
  std::size_t zero_block = 0;
};

// Symmetric elimination choosing the largest remaining positive diagonal entry each step.
inline Definiteness ldlt(Matrix m) {
  Definiteness d;
  const std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto v = m(i, i).as_rational();
      if (*v > 0 && (!best || *v > *m(*best, *best).as_rational())) best = i;
    }
    if (!best) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !m(i, j).is_zero()) {
            if (i == j) d.pivots.push_back(m(i, i));
            d.indefinite = true;
            return d;
          }
      d.zero_block = n - step;
      return d;
    }
    std::size_t p = *best;
    Scalar piv = m(p, p);
    d.pivots.push_back(piv);
    done[p] = true;
    Scalar inv = piv.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, p).is_zero()) continue;
      Scalar c = m(i, p) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m(i, j) -= c * m(p, j);
    }
  }
  return d;
}

inline std::vector<std::int64_t> positive_kernel_vector(const Matrix& t) {
  auto ker = kernel(t);
  if (ker.size() != 1) return {};
  Integer l = 1;
  for (const auto& c : ker[0]) l = boost::integer::lcm(l, boost::multiprecision::denominator(*c.as_rational()));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : ker[0]) {
    Integer v = boost::multiprecision::numerator(*c.as_rational() * l);
    ints.push_back(v);
    g = boost::integer::gcd(g, v < 0 ? Integer(-v) : v);
  }
  bool negative = false;
  for (const auto& v : ints) negative = negative || v < 0;
  std::vector<std::int64_t> out;
  for (auto& v : ints) out.push_back(static_cast<std::int64_t>((negative ? -v : v) / g));
  return out;
}

// Name from shape invariants, or empty if the shape matches nothing in the expected family.
inline std::string shape_name(const UndirectedGraph& g, GraphFamily family) {
  const std::size_t n = g.size();
  std::size_t max_mult = 0, edges = 0;
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      max_mult = std::max(max_mult, g.mult[i][j]);
      edges += g.mult[i][j];
    }
  }
  if (family == GraphFamily::ExtendedDynkin && n == 2 && max_mult == 2) return "~A1";
  if (max_mult > 1) return "";
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i)
    if (deg[i] >= 3) branch.push_back(i);
  bool all_two = std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
  // arm lengths from a branch vertex, counting vertices until a leaf or another branch vertex
  auto arms = [&](std::size_t c) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < n; ++w) {
      if (!g.mult[c][w] || w == c) continue;
      std::size_t prev = c, cur = w, len = 1;
      while (deg[cur] == 2) {
        std::size_t next = n;
        for (std::size_t x = 0; x < n; ++x)
          if (g.mult[cur][x] && x != prev && x != cur) next = x;
        prev = cur;
        cur = next;
        ++len;
      }
      out.push_back(deg[cur] == 1 ? len : 0);  // 0 marks an arm ending in a branch vertex
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (family == GraphFamily::Dynkin) {
    if (edges != n - 1) return "";
    if (branch.empty()) return "A" + std::to_string(n);
    if (branch.size() != 1 || deg[branch[0]] != 3) return "";
    auto a = arms(branch[0]);
    if (a[0] == 1 && a[1] == 1) return "D" + std::to_string(n);
    if (a == std::vector<std::size_t>{1, 2, 2}) return "E6";
    if (a == std::vector<std::size_t>{1, 2, 3}) return "E7";
    if (a == std::vector<std::size_t>{1, 2, 4}) return "E8";
    return "";
  }
  if (family == GraphFamily::ExtendedDynkin) {
    if (n >= 3 && all_two && edges == n) return "~A" + std::to_string(n - 1);
    if (edges != n - 1) return "";
    if (branch.size() == 1 && deg[branch[0]] == 4 && arms(branch[0]) == std::vector<std::size_t>{1, 1, 1, 1}) return "~D4";
    if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
      auto a = arms(branch[0]), b = arms(branch[1]);
      if (a == std::vector<std::size_t>{0, 1, 1} && b == std::vector<std::size_t>{0, 1, 1}) return "~D" + std::to_string(n - 1);
      return "";
    }
    if (branch.size() != 1 || deg[branch[0]] != 3) return "";
    auto a = arms(branch[0]);
    if (a == std::vector<std::size_t>{2, 2, 2}) return "~E6";
    if (a == std::vector<std::size_t>{1, 3, 3}) return "~E7";
    if (a == std::vector<std::size_t>{1, 2, 5}) return "~E8";
    return "";
  }
  return "";
}

inline GraphType recognize_connected(const UndirectedGraph& g) {
  GraphType t;
  if (g.has_loop()) {
    t.definiteness = "loop present";
    return t;
  }
  Matrix tm = tits_matrix(g);
  Definiteness d = ldlt(tm);
  t.pivots = d.pivots;
  t.kernel_dim = d.zero_block;
  if (d.indefinite) {
    t.definiteness = "indefinite";
    return t;
  }
  if (d.zero_block == 0) {
    t.definiteness = "positive definite";
    t.family = GraphFamily::Dynkin;
  } else {
    t.definiteness = "positive semidefinite";
    if (d.zero_block != 1) return t;
    t.family = GraphFamily::ExtendedDynkin;
    t.kernel = positive_kernel_vector(tm);
    if (t.kernel.empty() || std::any_of(t.kernel.begin(), t.kernel.end(), [](std::int64_t v) { return v <= 0; }))
      fail(ErrorCode::InternalInconsistency, "semidefinite Tits form without a positive kernel vector");
  }
  t.name = shape_name(g, t.family);
  if (t.name.empty())
    fail(ErrorCode::InternalInconsistency, "definiteness class " + t.definiteness + " does not match the graph shape");
  return t;
}

}  // namespace detail

// Per-component types.
inline std::vector<GraphType> recognize_components(const UndirectedGraph& g) {
  std::vector<GraphType> out;
  for (const auto& c : g.components()) out.push_back(detail::recognize_connected(g.induced(c)));
  return out;
}

inline GraphType recognize_graph(const UndirectedGraph& g) {
  if (g.size() == 0) fail(ErrorCode::EmptyQuiver, "empty graph");
  auto comps = recognize_components(g);
  for (const auto& c : comps)
    if (c.label() != comps[0].label()) fail(ErrorCode::Disconnected, "components have different types");
  return comps[0];
}

// ---------------------------------------------------------------- standard graphs

namespace graphs {

inline UndirectedGraph path(std::size_t n) {
  auto g = UndirectedGraph::with_vertices(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline UndirectedGraph cycle(std::size_t n) {
  if (n == 2) {
    auto g = UndirectedGraph::with_vertices(2);
    g.add_edge(0, 1, 2);
    return g;
  }
  auto g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Three arms of the given lengths attached to a centre vertex.
inline UndirectedGraph star(std::size_t p, std::size_t q, std::size_t r) {
  auto g = UndirectedGraph::with_vertices(1 + p + q + r);
  std::size_t next = 1;
  for (std::size_t len : {p, q, r}) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < len; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

inline UndirectedGraph dynkin_d(std::size_t n) { return star(1, 1, n - 3); }

inline UndirectedGraph extended_d(std::size_t n) {
  if (n == 4) {
    auto g = UndirectedGraph::with_vertices(5);
    for (std::size_t i = 1; i < 5; ++i) g.add_edge(0, i);
    return g;
  }
  // path 0 .. n-2 with extra leaves on its second and second-to-last vertices
  auto g = UndirectedGraph::with_vertices(n + 1);
  for (std::size_t i = 0; i + 2 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(1, n - 1);
  g.add_edge(n - 3, n);
  return g;
}

struct Named {
  std::string name;
  UndirectedGraph graph;
  GraphFamily family;
};

// Every Dynkin and extended Dynkin graph with at most max_vertices vertices.
inline std::vector<Named> catalogue(std::size_t max_vertices) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) out.push_back({"A" + std::to_string(n), path(n), GraphFamily::Dynkin});
  for (std::size_t n = 4; n <= max_vertices; ++n) out.push_back({"D" + std::to_string(n), dynkin_d(n), GraphFamily::Dynkin});
  if (max_vertices >= 6) out.push_back({"E6", star(1, 2, 2), GraphFamily::Dynkin});
  if (max_vertices >= 7) out.push_back({"E7", star(1, 2, 3), GraphFamily::Dynkin});
  if (max_vertices >= 8) out.push_back({"E8", star(1, 2, 4), GraphFamily::Dynkin});
  for (std::size_t n = 2; n <= max_vertices; ++n)
    out.push_back({"~A" + std::to_string(n - 1), cycle(n), GraphFamily::ExtendedDynkin});
  for (std::size_t n = 4; n + 1 <= max_vertices; ++n)
    out.push_back({"~D" + std::to_string(n), extended_d(n), GraphFamily::ExtendedDynkin});
  if (max_vertices >= 7) out.push_back({"~E6", star(2, 2, 2), GraphFamily::ExtendedDynkin});
  if (max_vertices >= 8) out.push_back({"~E7", star(1, 3, 3), GraphFamily::ExtendedDynkin});
  if (max_vertices >= 9) out.push_back({"~E8", star(1, 2, 5), GraphFamily::ExtendedDynkin});
  return out;
}

}  // namespace graphs

// ---------------------------------------------------------------- algebra type

struct AlgebraType {
  GraphType type;
  std::vector<GraphType> components;
  Quiver separated;
};

// Type of the separated quiver of L / soc L.
inline AlgebraType algebra_type(const Algebra& l) {
  AlgebraType t;
  t.separated = separated_quiver(quotient_by_socle(l));
  auto g = underlying_graph(t.separated);
  t.components = recognize_components(g);
  for (const auto& c : t.components)
    if (c.label() != t.components[0].label())
      fail(ErrorCode::TypeInconsistent, "separated quiver components have types " + t.components[0].label() + " and " + c.label());
  t.type = t.components.at(0);
  return t;
}

// ---------------------------------------------------------------- (Fg)

enum class FgAnswer { Yes, No, Unknown };

inline std::string to_string(FgAnswer a) {
  switch (a) {
    case FgAnswer::Yes: return "Yes";
    case FgAnswer::No: return "No";
    case FgAnswer::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct FgReason {
  std::string check;
  std::string clause;
  std::string outcome;
};

struct FgOptions {
  std::uint64_t bound = 64;
  std::size_t attempts = 64;
  std::uint64_t seed = 0;
};

struct FgVerdict {
  FgAnswer answer = FgAnswer::Unknown;
  std::vector<FgReason> reasons;
  std::vector<std::string> hypothesis_failures;
  std::vector<std::string> notices;
  std::vector<FgVerdict> blocks;  // per connected block when the input is disconnected
  std::optional<std::string> type;
  std::optional<Order> outer;
};

namespace detail {

inline bool radical_power_zero(const Algebra& a, std::size_t k) {
  return radical_layers(a).size() <= k;
}

inline FgVerdict decide_connected(const AlgebraPtr& a, const FgOptions& opt) {
  FgVerdict v;
  auto add = [&](std::string check, std::string clause, std::string outcome) {
    v.reasons.push_back({std::move(check), std::move(clause), std::move(outcome)});
  };
  // (1) self-injective
  FrobeniusSearch fs = find_frobenius_form(a, opt.attempts, opt.seed);
  if (!fs.form) fail(ErrorCode::NotSelfInjective, "no nondegenerate associative form: " + fs.method);
  add("frobenius", "self-injective (Frobenius) algebras only", "form found: " + fs.method);
  // (2) radical square zero
  if (radical_power_zero(*a, 2)) {
    add("radical-square-zero", "rad^2 = 0: Nakayama algebra of finite representation type", "rad^2 = 0");
    v.answer = FgAnswer::Yes;
    return v;
  }
  add("radical-square-zero", "rad^2 = 0: Nakayama algebra of finite representation type", "rad^2 != 0");
  // (3) radical cube zero
  if (!radical_power_zero(*a, 3)) fail(ErrorCode::OutOfScope, "only radical-cube-zero algebras are classified");
  add("radical-cube-zero", "classification covers rad^3 = 0", "rad^3 = 0");
  // (4) hypotheses on the field
  AlgebraMorphism nu = nakayama_from_form(*fs.form);
  const std::uint64_t p = a->field().characteristic();
  if (p == 2) {
    v.hypothesis_failures.push_back("characteristic 2: 2 must be invertible");
    add("characteristic", "2 and the order of the Nakayama automorphism must be invertible", "characteristic 2");
  } else {
    add("characteristic", "2 and the order of the Nakayama automorphism must be invertible",
        p == 0 ? "characteristic 0" : "characteristic " + std::to_string(p));
  }
  if (p != 0) {
    Order o = automorphism_order(nu, opt.bound);
    if (!o.is_finite()) {
      v.hypothesis_failures.push_back("order of the Nakayama automorphism exceeds the bound " + std::to_string(opt.bound));
      add("nakayama-order", "order of the Nakayama automorphism invertible in k", "ExceedsBound");
    } else if (o.value % p == 0) {
      v.hypothesis_failures.push_back("characteristic " + std::to_string(p) + " divides the Nakayama order " +
                                      std::to_string(o.value));
      add("nakayama-order", "order of the Nakayama automorphism invertible in k", o.to_string() + ", divisible by p");
    } else {
      add("nakayama-order", "order of the Nakayama automorphism invertible in k", o.to_string());
    }
  } else {
    add("nakayama-order", "order of the Nakayama automorphism invertible in k", "characteristic 0: holds");
  }
  if (!v.hypothesis_failures.empty()) {
    v.answer = FgAnswer::Unknown;
    return v;
  }
  // (5) type
  AlgebraType t = algebra_type(*a);
  v.type = t.type.label();
  if (t.type.family == GraphFamily::Dynkin) {
    add("type", "Dynkin type gives (Fg)", t.type.label());
    v.answer = FgAnswer::Yes;
    return v;
  }
  if (t.type.family == GraphFamily::Other) {
    add("type", "types that are neither Dynkin nor extended Dynkin have infinite complexity", t.type.label());
    v.answer = FgAnswer::No;
    return v;
  }
  if (!t.type.is_affine_a()) {
    add("type", "extended Dynkin type other than ~A_n gives (Fg)", t.type.label());
    v.answer = FgAnswer::Yes;
    return v;
  }
  add("type", "type ~A_n: (Fg) iff the Nakayama automorphism has finite outer order", t.type.label());
  // (6) outer order
  OuterOrder oo = outer_order(nu, opt.bound, opt.seed);
  v.outer = oo.order;
  std::string detail_text = oo.order.to_string() + " via " + oo.method;
  for (const auto& n : oo.notes) detail_text += "; " + n;
  add("outer-order", "finite outer order of the Nakayama automorphism", detail_text);
  InnerResult inner = is_inner(nu, opt.seed);
  if (inner.inner() && !(oo.order.is_finite() && oo.order.value == 1))
    fail(ErrorCode::InternalInconsistency, "symmetric algebra of type ~A_n without trivial outer order");
  switch (oo.order.kind) {
    case OrderKind::Finite: v.answer = FgAnswer::Yes; break;
    case OrderKind::Infinite: v.answer = FgAnswer::No; break;
    case OrderKind::ExceedsBound:
      v.answer = FgAnswer::Unknown;
      v.hypothesis_failures.push_back("outer order exceeds the search bound " + std::to_string(opt.bound));
      break;
  }
  // the trail ends with the deciding observation
  if (oo.order.kind == OrderKind::Infinite && !oo.notes.empty()) add("cycle-invariant", "q must be a root of unity", oo.notes.back());
  return v;
}

}  // namespace detail

inline FgVerdict decide_fg(const AlgebraPtr& input, const FgOptions& opt = {}) {
  FgVerdict v;
  AlgebraPtr a = input;
  BasicIdempotent bi = basic_idempotent(*a);
  if (!bi.already_basic) {
    a = share(basic_algebra(*a));
    v.notices.push_back("input replaced by its basic algebra (dimension " + std::to_string(a->dim()) + ")");
    v.reasons.push_back({"basic", "reduction to the basic algebra", "basified to dimension " + std::to_string(a->dim())});
  }
  auto comps = connected_components(*a);
  if (comps.size() <= 1) {
    FgVerdict c = detail::decide_connected(a, opt);
    c.reasons.insert(c.reasons.begin(), v.reasons.begin(), v.reasons.end());
    c.notices.insert(c.notices.begin(), v.notices.begin(), v.notices.end());
    return c;
  }
  v.notices.push_back("disconnected input: verdicts per block, overall answer is their conjunction");
  bool all_yes = true, any_no = false;
  for (const auto& comp : comps) {
    Vector eta = a->zero();
    for (auto t : comp) axpy(eta, a->field().one(), a->idempotent(t));
    auto block = share(idempotent_truncation(*a, eta));
    FgVerdict b = detail::decide_connected(block, opt);
    all_yes = all_yes && b.answer == FgAnswer::Yes;
    any_no = any_no || b.answer == FgAnswer::No;
    for (const auto& h : b.hypothesis_failures) v.hypothesis_failures.push_back(h);
    v.reasons.push_back({"block", "per-block verdict", to_string(b.answer)});
    v.blocks.push_back(std::move(b));
  }
  v.answer = any_no ? FgAnswer::No : all_yes ? FgAnswer::Yes : FgAnswer::Unknown;
  return v;
}

}  // namespace qalg
