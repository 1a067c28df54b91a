// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// All checks are exact; the only tolerances are the wall-clock limits printed with each line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "qalg/qalg.hpp"

using namespace qalg;
using json = io::json;

namespace {

const Field Q{FieldDescriptor::rationals()};
const Field F5{FieldDescriptor::prime(5)};

std::string data(const std::string& name) { return std::string(QALG_DATA_DIR) + "/" + name; }
AlgebraPtr built(const Presentation& p) { return share(build_algebra(p)); }
AlgebraPtr lambda(const std::string& q, const Field& f = Q) { return built(corpus::quantum_exterior(f, q)); }
io::LoadedAlgebra wrap(const AlgebraPtr& a, const std::string& name) {
  return {a, io::fnv1a64(io::algebra_to_json(*a).dump()), name};
}

// Collects failures; a criterion passes when none were recorded and it ran within its time limit.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = untimed
  std::function<void(Checker&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// x -> (-1)^deg x
AlgebraMorphism sign_automorphism(const AlgebraPtr& a) {
  Matrix m(a->field(), a->dim(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) m(i, i) = a->degree(i) % 2 ? a->field().from_int(-1) : a->field().one();
  AlgebraMorphism f{a, a, m};
  verify_automorphism(f);
  return f;
}

AlgebraMorphism nakayama(const AlgebraPtr& a) {
  auto fs = find_frobenius_form(a);
  if (!fs.form) fail(ErrorCode::NotSelfInjective, "no Frobenius form");
  return nakayama_from_form(*fs.form);
}

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

std::vector<NamedAlgebra> construction_corpus() {
  return {{"k", built(corpus::point(Q))},
          {"k[x]/(x^3)", built(corpus::truncated_polynomial(Q, 3))},
          {"Lambda_1", lambda("1")},
          {"Lambda_2", lambda("2")},
          {"Delta(Kronecker)", io::load(data("delta_kronecker.json")).algebra},
          {"Delta(kA2)", trivial_extension(built(corpus::path_a2(Q))).algebra}};
}

// Every construction applicable to the input, by name.
std::vector<NamedAlgebra> all_constructions(const AlgebraPtr& l) {
  std::vector<NamedAlgebra> out;
  auto sign = sign_automorphism(l);
  out.push_back({"skew(sign)", share(skew_group_algebra(cyclic_action(sign, sign.is_identity() ? 1 : 2)))});
  AlgebraMorphism nu = nakayama(l);
  Order o = automorphism_order(nu, 64);
  if (o.is_finite()) out.push_back({"skew(nu)", share(skew_group_algebra(cyclic_action(nu, o.value)))});
  out.push_back({"smash2", share(smash_z2(*l))});
  out.push_back({"veronese2", share(quasi_veronese2(*l))});
  out.push_back({"beilinson", share(beilinson(*l))});
  out.push_back({"trivext", trivial_extension(l).algebra});
  out.push_back({"twisted-trivext(nu)", twisted_trivial_extension(l, nu).algebra});
  auto dbl = share(double_construction(*l));
  out.push_back({"double", dbl});
  out.push_back({"basic(double)", share(basic_algebra(*dbl))});
  return out;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "quantum exterior family: fg verdicts and outer order", 1.0, [](Checker& k) {
    struct Case {
      std::string file;
      std::string answer;
      std::string outer;
    };
    for (const auto& x : std::vector<Case>{{"lambda_q2.json", "No", "Infinite"},
                                           {"lambda_q1.json", "Yes", "Finite(2)"},
                                           {"lambda_qm1.json", "Yes", ""},
                                           {"lambda_q2_f5.json", "Yes", "Finite(4)"}}) {
      auto start = std::chrono::steady_clock::now();
      json r = report::cmd_fg(io::load(data(x.file)))["results"];
      double t = seconds_since(start);
      k.expect(r["answer"] == x.answer, x.file + ": answer " + r["answer"].dump());
      if (!x.outer.empty()) k.expect(r.value("outer_order", "") == x.outer, x.file + ": outer order " + r.value("outer_order", "-"));
      k.expect(t < 1.0, x.file + ": took " + std::to_string(t) + " s");
    }
  }});

  c.push_back({2, "Nakayama automorphism of Lambda_q and the gram relation", 0, [](Checker& k) {
    json r = report::cmd_nakayama(io::load(data("lambda_q2.json")))["results"];
    k.expect(r["nu"]["x"] == "-2*x" && r["nu"]["y"] == "-1/2*y", "report for q = 2: " + r["nu"].dump());
    k.expect(r["gram_relation_pairs"] == 16, "report checked " + r["gram_relation_pairs"].dump() + " pairs");
    for (const char* q : {"1", "-1", "2", "3/2", "-5/7"}) {
      auto a = lambda(q);
      auto fs = find_frobenius_form(a);
      if (!fs.form) {
        k.expect(false, std::string("no form for q = ") + q);
        continue;
      }
      AlgebraMorphism nu = nakayama_from_form(*fs.form);
      Scalar qs = parse_scalar(q, Q);
      std::size_t x = *a->index_of(BasisLabel::of_path({"x"})), y = *a->index_of(BasisLabel::of_path({"y"}));
      Vector ex = a->zero(), ey = a->zero();
      ex[x] = -qs;
      ey[y] = -qs.inverse();
      k.expect(nu.image(x) == ex && nu.image(y) == ey, std::string("nu on generators for q = ") + q);
      std::size_t ok = 0;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          Vector bi = a->basis_vector(i), bj = a->basis_vector(j);
          if ((*fs.form)(bi, bj) == (*fs.form)(bj, nu.apply(bi))) ++ok;
        }
      k.expect(ok == 16, std::string("gram relation holds on ") + std::to_string(ok) + "/16 pairs for q = " + q);
    }
  }});

  c.push_back({3, "k[x]/(x^3) and Delta(Kronecker): type, symmetry, fg", 1.0, [](Checker& k) {
    auto x3 = io::load(data("truncated_x3.json"));
    k.expect(report::cmd_type(x3)["results"]["type"] == "Dynkin(A2)", "type of k[x]/(x^3)");
    json v = report::cmd_fg(x3)["results"];
    k.expect(v["answer"] == "Yes", "fg of k[x]/(x^3)");
    k.expect(v["reasons"].back()["clause"] == "Dynkin type gives (Fg)", "deciding clause " + v["reasons"].back().dump());
    auto dk = io::load(data("delta_kronecker.json"));
    k.expect(is_symmetric(dk.algebra).symmetric, "Delta(Kronecker) symmetric");
    k.expect(report::cmd_type(dk)["results"]["type"] == "ExtendedDynkin(~A1)", "type of Delta(Kronecker)");
    k.expect(report::cmd_fg(dk)["results"]["answer"] == "Yes", "fg of Delta(Kronecker)");
  }});

  c.push_back({4, "construction dimensions and the Veronese/smash isomorphism", 0, [](Checker& k) {
    for (const auto& e : construction_corpus()) {
      const std::size_t n = e.algebra->dim();
      auto sign = sign_automorphism(e.algebra);
      std::size_t order = sign.is_identity() ? 1 : 2;
      k.expect(skew_group_algebra(cyclic_action(sign, order)).dim() == order * n, e.name + ": dim of skew group algebra");
      AlgebraMorphism nu = nakayama(e.algebra);
      Order o = automorphism_order(nu, 64);
      if (o.is_finite())
        k.expect(skew_group_algebra(cyclic_action(nu, o.value)).dim() == o.value * n, e.name + ": dim of skew algebra by <nu>");
      auto smash = share(smash_z2(*e.algebra));
      auto ver = share(quasi_veronese2(*e.algebra));
      k.expect(smash->dim() == 2 * n && ver->dim() == 2 * n, e.name + ": smash and Veronese dimensions");
      AlgebraMorphism phi = veronese_smash_iso(ver, smash);
      std::size_t good = 0;
      for (std::size_t i = 0; i < ver->dim(); ++i)
        for (std::size_t j = 0; j < ver->dim(); ++j)
          if (phi.apply(ver->multiply(ver->basis_vector(i), ver->basis_vector(j))) ==
              smash->multiply(phi.image(i), phi.image(j)))
            ++good;
      k.expect(good == ver->dim() * ver->dim(), e.name + ": iso multiplicative on " + std::to_string(good) + " pairs");
    }
  }});

  c.push_back({5, "skew group algebra of Lambda_1 by <nu> is symmetric", 0, [](Checker& k) {
    auto r = skew_group_symmetric_check(trace_form(lambda("1")));
    k.expect(r.group_order == 2, "group order " + std::to_string(r.group_order));
    k.expect(r.witness_verified, "1 (x) nu does not conjugate");
    k.expect(!determinant(r.form.gram).is_zero(), "skew group form degenerate");
    k.expect(r.symmetric, "not symmetric");
  }});

  c.push_back({6, "twisted trivial extension of the Kronecker algebra by the arrow swap", 0, [](Checker& k) {
    auto a = io::load(data("kronecker.json")).algebra;
    ArrowMap m;
    m.arrows["a"] = {{Q.one(), "b"}};
    m.arrows["b"] = {{Q.one(), "a"}};
    auto tw = twisted_trivial_extension(a, morphism_from_arrow_map(a, m));
    AlgebraMorphism nu = nakayama(tw.algebra);
    AlgebraMorphism sigma_hat = tw.nakayama->inverse();
    InnerResult r = is_inner(nu.after(sigma_hat));
    k.expect(r.inner(), "nu composed with sigma-hat is not inner: " + r.reason);
    if (r.inner()) k.expect(detail::conjugates(*tw.algebra, nu.after(sigma_hat), r.witness), "witness does not verify");
  }});

  c.push_back({7, "double is Morita equivalent to the input at quiver level", 5.0, [](Checker& k) {
    for (const auto& [name, l] : std::vector<NamedAlgebra>{{"k[x]/(x^3)", built(corpus::truncated_polynomial(Q, 3))}, {"Lambda_1", lambda("1")}}) {
      Algebra dbl = double_construction(*l);
      MoritaCheck m = double_morita_check(*l, dbl);
      k.expect(m.quivers_match, name + ": quivers differ");
      k.expect(m.basic_dim == l->dim(), name + ": basic dimension " + std::to_string(m.basic_dim));
    }
  }});

  c.push_back({8, "graph recognition sweep up to 9 vertices with augmentations", 10.0, [](Checker& k) {
    std::size_t graphs_seen = 0, augmented = 0;
    for (const auto& entry : graphs::catalogue(9)) {
      ++graphs_seen;
      GraphType t = recognize_graph(entry.graph);
      k.expect(t.family == entry.family && t.name == entry.name, entry.name + " recognised as " + t.label());
      if (entry.family == GraphFamily::Dynkin) {
        bool positive = t.pivots.size() == entry.graph.size();
        for (const auto& p : t.pivots) positive = positive && *p.as_rational() > 0;
        k.expect(positive && t.definiteness == "positive definite", entry.name + ": definiteness certificate");
        continue;
      }
      bool kernel_ok = t.kernel_dim == 1 && t.kernel.size() == entry.graph.size();
      for (auto v : t.kernel) kernel_ok = kernel_ok && v > 0;
      Matrix tm = tits_matrix(entry.graph);
      for (std::size_t i = 0; i < tm.rows() && kernel_ok; ++i) {
        Scalar s = Q.zero();
        for (std::size_t j = 0; j < tm.cols(); ++j) s += tm(i, j) * Q.from_int(t.kernel[j]);
        kernel_ok = s.is_zero();
      }
      k.expect(kernel_ok, entry.name + ": kernel certificate");
      for (std::size_t i = 0; i < entry.graph.size(); ++i)
        for (std::size_t j = i + 1; j < entry.graph.size(); ++j) {
          auto g = entry.graph;
          g.add_edge(i, j);
          ++augmented;
          k.expect(recognize_graph(g).family == GraphFamily::Other, entry.name + " plus edge " + std::to_string(i) + "-" + std::to_string(j));
        }
    }
    // A1..A9, D4..D9, E6..E8, ~A1..~A8, ~D4..~D8, ~E6..~E8
    k.expect(graphs_seen == 9 + 6 + 3 + 8 + 5 + 3, "catalogue has " + std::to_string(graphs_seen) + " graphs");
    k.expect(augmented > 100, "only " + std::to_string(augmented) + " augmentations");
  }});

  c.push_back({9, "check_algebra on every construction over the corpus", 0, [](Checker& k) {
    for (const auto& e : construction_corpus())
      for (const auto& out : all_constructions(e.algebra)) {
        auto v = check_algebra(*out.algebra);
        k.expect(v.empty(), e.name + " / " + out.name + ": " + (v.empty() ? "" : v[0].kind));
      }
  }});

  c.push_back({10, "fg reports are byte-identical across runs with a fixed seed", 0, [](Checker& k) {
    std::vector<std::function<io::LoadedAlgebra()>> inputs;
    for (const char* f : {"truncated_x3.json", "lambda_q1.json", "lambda_qm1.json", "lambda_q2.json", "lambda_q2_f5.json",
                          "delta_kronecker.json", "delta_kronecker3.json"})
      inputs.push_back([f] { return io::load(data(f)); });
    inputs.push_back([] { return wrap(built(corpus::point(Q)), "k"); });
    inputs.push_back([] { return wrap(trivial_extension(built(corpus::path_a2(Q))).algebra, "Delta(kA2)"); });
    for (const auto& make : inputs) {
      std::string first;
      for (int run = 0; run < 3; ++run) {
        io::LoadedAlgebra in = make();
        json r = report::cmd_fg(in, {64, 64, 20261016});
        std::string bytes = r.dump(2) + "\n" + report::render_text(r);
        if (run == 0) {
          first = bytes;
        } else {
          k.expect(bytes == first, in.source + ": run " + std::to_string(run + 1) + " differs");
        }
      }
    }
  }});

  return c;
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Checker k;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(k);
    } catch (const std::exception& e) {
      k.failures.push_back(std::string("exception: ") + e.what());
    }
    double t = seconds_since(start);
    if (c.limit_s > 0 && t >= c.limit_s) k.failures.push_back("time limit exceeded");
    bool pass = k.failures.empty();
    failed += !pass;
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", t, c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", t);
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ")";
    if (!pass) {
      std::cout << " -- " << k.failures.front();
      if (k.failures.size() > 1) std::cout << " (+" << k.failures.size() - 1 << " more)";
    }
    std::cout << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
