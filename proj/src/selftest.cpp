#include "qalg/selftest.hpp"

#include <filesystem>
#include <functional>
#include <random>

#include "qalg/corpus.hpp"

namespace qalg::selftest {

std::vector<Entry> corpus_entries() {
  const Field q{FieldDescriptor::rationals()};
  const Field f5{FieldDescriptor::prime(5)};
  auto b = [](const Presentation& p) { return share(build_algebra(p)); };
  std::vector<Entry> out{
      {"k", b(corpus::point(q))},
      {"k[x]/(x^3)", b(corpus::truncated_polynomial(q, 3))},
      {"Lambda_1", b(corpus::quantum_exterior(q, "1"))},
      {"Lambda_2", b(corpus::quantum_exterior(q, "2"))},
      {"Lambda_2/F5", b(corpus::quantum_exterior(f5, "2"))},
      {"kA2", b(corpus::path_a2(q))},
  };
  out.push_back({"Delta(Kronecker)", trivial_extension(b(corpus::kronecker(q))).algebra});
  out.push_back({"Delta(kA2)", trivial_extension(b(corpus::path_a2(q))).algebra});
  return out;
}

namespace detail {

using Check = std::function<std::optional<std::string>()>;

Outcome run(const std::string& name, const Check& check) {
  try {
    auto failure = check();
    return {name, !failure, failure.value_or("")};
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
}

std::optional<std::string> field_axioms(const Field& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    using ::qalg::detail::random_scalar;
    Scalar x = random_scalar(f, rng, 7);
    if (f.kind() == FieldKind::Cyclotomic) x += random_scalar(f, rng, 7) * f.generator() / f.from_int(1 + rng() % 5);
    return x;
  };
  for (int i = 0; i < 40; ++i) {
    Scalar a = draw(), b = draw(), c = draw();
    if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c))
      return "ring axiom fails for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    if (!a.is_zero() && !(a * a.inverse()).is_one()) return "inverse fails for " + a.to_string();
    if (!(parse_scalar(a.to_string(), f) == a)) return "text round trip fails for " + a.to_string();
  }
  return std::nullopt;
}

std::optional<std::string> table_ok(const std::string& what, const Algebra& a) {
  auto v = check_algebra(a);
  if (v.empty()) return std::nullopt;
  return what + ": " + v[0].kind + " " + v[0].detail;
}

}  // namespace detail

std::vector<Outcome> builtin_properties(std::uint64_t seed) {
  using detail::run;
  std::vector<Outcome> out;
  for (const char* d : {"Q", "F5", "F7", "Q(z8)"}) {
    Field f(FieldDescriptor::parse(d));
    out.push_back(run(std::string("field axioms ") + d, [&] { return detail::field_axioms(f, seed); }));
  }
  auto entries = corpus_entries();
  for (const auto& e : entries) {
    out.push_back(run("check_algebra " + e.name, [&] { return detail::table_ok(e.name, *e.algebra); }));
    out.push_back(run("radical nilpotent and semisimple top " + e.name, [&]() -> std::optional<std::string> {
      auto layers = radical_layers(*e.algebra);
      if (layers.back().dim() == 0) return "last layer should be nonzero";
      if (layers[0].dim() - radical(*e.algebra).dim() != e.algebra->unit_idempotents().size())
        return "top dimension differs from the number of vertices";
      return std::nullopt;
    }));
    out.push_back(run("file round trip " + e.name, [&]() -> std::optional<std::string> {
      Algebra back = io::algebra_from_json(io::parse_json_text(io::algebra_to_json(*e.algebra).dump()));
      if (back.dim() != e.algebra->dim()) return "dimension changed";
      for (std::size_t i = 0; i < back.dim(); ++i)
        for (std::size_t j = 0; j < back.dim(); ++j)
          if (!(back.product_vector(i, j) == e.algebra->product_vector(i, j))) return "structure constants changed";
      return std::nullopt;
    }));
  }
  for (const auto& e : entries) {
    if (e.name == "kA2") continue;
    out.push_back(run("Nakayama gram relation " + e.name, [&]() -> std::optional<std::string> {
      auto fs = find_frobenius_form(e.algebra, 64, seed);
      if (!fs.form) return "no Frobenius form found";
      AlgebraMorphism nu = nakayama_from_form(*fs.form);
      if (auto d = morphism_defect(nu)) return "nu is not an automorphism: " + *d;
      for (std::size_t i = 0; i < e.algebra->dim(); ++i)
        for (std::size_t j = 0; j < e.algebra->dim(); ++j) {
          Vector a = e.algebra->basis_vector(i), b = e.algebra->basis_vector(j);
          if (!((*fs.form)(a, b) == (*fs.form)(b, nu.apply(a)))) return "fails at a pair";
        }
      return std::nullopt;
    }));
  }
  out.push_back(run("kA2 is not Frobenius", [&]() -> std::optional<std::string> {
    auto fs = find_frobenius_form(entries[5].algebra, 64, seed);
    if (fs.form) return "found a form";
    return std::nullopt;
  }));
  for (const auto& e : entries) {
    if (e.algebra->top_degree() > 2 || !e.algebra->graded()) continue;
    out.push_back(run("constructions " + e.name, [&]() -> std::optional<std::string> {
      auto smash = share(smash_z2(*e.algebra));
      auto ver = share(quasi_veronese2(*e.algebra));
      auto bei = share(beilinson(*e.algebra));
      for (const auto& [what, alg] : std::vector<std::pair<std::string, AlgebraPtr>>{{"smash", smash}, {"veronese", ver}, {"beilinson", bei}})
        if (auto bad = detail::table_ok(what, *alg)) return bad;
      if (smash->dim() != 2 * e.algebra->dim() || ver->dim() != 2 * e.algebra->dim()) return "dimension identity fails";
      veronese_smash_iso(ver, smash);
      auto te = trivial_extension(e.algebra);
      if (auto bad = detail::table_ok("trivial extension", *te.algebra)) return bad;
      return std::nullopt;
    }));
  }
  out.push_back(run("graph catalogue up to 8 vertices", [&]() -> std::optional<std::string> {
    for (const auto& g : graphs::catalogue(8)) {
      auto t = recognize_graph(g.graph);
      if (t.family != g.family || t.name != g.name) return g.name + " recognised as " + t.label();
    }
    return std::nullopt;
  }));
  out.push_back(run("fg verdicts on the quantum exterior family", [&]() -> std::optional<std::string> {
    const std::vector<std::pair<std::size_t, FgAnswer>> expect{{1, FgAnswer::Yes}, {2, FgAnswer::Yes}, {3, FgAnswer::No}, {4, FgAnswer::Yes}};
    for (const auto& [i, answer] : expect) {
      auto v = decide_fg(entries[i].algebra, {64, 64, seed});
      if (v.answer != answer) return entries[i].name + " gave " + to_string(v.answer);
    }
    return std::nullopt;
  }));
  out.push_back(run("fg verdicts independent of the seed", [&]() -> std::optional<std::string> {
    for (const auto& e : entries) {
      if (e.name == "kA2") continue;
      auto a = decide_fg(e.algebra, {64, 64, seed});
      auto b = decide_fg(e.algebra, {64, 64, seed + 1});
      if (a.answer != b.answer) return e.name + " changed its verdict";
    }
    return std::nullopt;
  }));
  return out;
}

Outcome check_file(const std::string& path) {
  return detail::run("check_algebra " + std::filesystem::path(path).filename().string(), [&]() -> std::optional<std::string> {
    io::load(path);
    return std::nullopt;
  });
}

Summary run_all(std::uint64_t seed, const std::vector<std::string>& files) {
  Summary s;
  s.builtin = builtin_properties(seed);
  for (const auto& f : files) s.files.push_back(check_file(f));
  return s;
}

std::string render(const Summary& s) {
  std::string out;
  std::size_t passed = 0, total = 0;
  for (const auto* group : {&s.builtin, &s.files})
    for (const auto& o : *group) {
      ++total;
      if (o.pass) ++passed;
      out += (o.pass ? "PASS " : "FAIL ") + o.name + (o.pass ? "" : ": " + o.detail) + "\n";
    }
  out += std::to_string(passed) + "/" + std::to_string(total) + " passed\n";
  return out;
}

report::json to_json(const Summary& s, std::uint64_t seed) {
  report::json r;
  r["command"] = "selftest";
  r["version"] = report::kVersion;
  r["seed"] = seed;
  report::json results = report::json::array();
  for (const auto* group : {&s.builtin, &s.files})
    for (const auto& o : *group) {
      report::json x{{"name", o.name}, {"pass", o.pass}};
      if (!o.pass) x["detail"] = o.detail;
      results.push_back(x);
    }
  r["results"] = results;
  return r;
}

}  // namespace qalg::selftest
