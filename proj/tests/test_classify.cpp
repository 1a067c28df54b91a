#include "qalg/classify.hpp"

#include <chrono>
#include <random>

#include "support.hpp"

using namespace qalg;
using namespace qalg::testing;

namespace {

AlgebraPtr lambda(const std::string& q, const Field& f = Q) { return built(corpus::quantum_exterior(f, q)); }

UndirectedGraph complete(std::size_t n) {
  auto g = UndirectedGraph::with_vertices(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

AlgebraPtr hereditary(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  return built(Presentation{Q, Quiver(std::move(vertices), std::move(arrows)), {}, 2});
}

}  // namespace

TEST(TitsMatrix, Examples) {
  Field q;
  EXPECT_EQ(tits_matrix(graphs::path(2)), Matrix::from_rows(q, 2, {{q.from_int(2), q.from_int(-1)}, {q.from_int(-1), q.from_int(2)}}));
  EXPECT_EQ(tits_matrix(graphs::cycle(2)), Matrix::from_rows(q, 2, {{q.from_int(2), q.from_int(-2)}, {q.from_int(-2), q.from_int(2)}}));
  Matrix e6 = tits_matrix(graphs::star(2, 2, 2));
  EXPECT_EQ(e6.rows(), 7u);
  // row sums: 2 - degree
  auto g = graphs::star(2, 2, 2);
  for (std::size_t i = 0; i < 7; ++i) {
    Scalar sum = q.zero();
    for (std::size_t j = 0; j < 7; ++j) sum += e6(i, j);
    EXPECT_EQ(sum, q.from_int(2 - static_cast<std::int64_t>(g.degree(i))));
  }
  auto loop = UndirectedGraph::with_vertices(1);
  loop.add_edge(0, 0);
  EXPECT_EQ(code_of([&] { tits_matrix(loop); }), ErrorCode::LoopPresent);
}

TEST(RecognizeGraph, Examples) {
  auto a5 = recognize_graph(graphs::path(5));
  EXPECT_EQ(a5.label(), "Dynkin(A5)");
  EXPECT_EQ(a5.definiteness, "positive definite");
  for (const auto& p : a5.pivots) EXPECT_TRUE(*p.as_rational() > 0);

  auto c4 = recognize_graph(graphs::cycle(4));
  EXPECT_EQ(c4.label(), "ExtendedDynkin(~A3)");
  EXPECT_EQ(c4.kernel, (std::vector<std::int64_t>{1, 1, 1, 1}));

  auto k4 = recognize_graph(complete(4));
  EXPECT_EQ(k4.label(), "Other");
  EXPECT_EQ(k4.definiteness, "indefinite");

  auto e8 = recognize_graph(graphs::star(1, 2, 5));
  EXPECT_EQ(e8.label(), "ExtendedDynkin(~E8)");
  EXPECT_EQ(e8.kernel.size(), 9u);
  std::int64_t top = *std::max_element(e8.kernel.begin(), e8.kernel.end());
  EXPECT_EQ(top, 6);
}

TEST(RecognizeGraph, DisconnectedInput) {
  auto g = UndirectedGraph::with_vertices(5);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  EXPECT_EQ(code_of([&] { recognize_graph(g); }), ErrorCode::Disconnected);
  auto comps = recognize_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].label(), "Dynkin(A2)");
  EXPECT_EQ(comps[1].label(), "Dynkin(A3)");
  auto same = UndirectedGraph::with_vertices(4);
  same.add_edge(0, 1, 2);
  same.add_edge(2, 3, 2);
  EXPECT_EQ(recognize_graph(same).label(), "ExtendedDynkin(~A1)");
}

TEST(RecognizeGraph, CatalogueSweepUpToNineVertices) {
  auto start = std::chrono::steady_clock::now();
  std::size_t augmented = 0;
  for (const auto& entry : graphs::catalogue(9)) {
    auto t = recognize_graph(entry.graph);
    EXPECT_EQ(t.family, entry.family) << entry.name;
    EXPECT_EQ(t.name, entry.name);
    if (entry.family == GraphFamily::Dynkin) {
      EXPECT_EQ(t.kernel_dim, 0u);
    } else {
      EXPECT_EQ(t.kernel_dim, 1u) << entry.name;
      for (auto v : t.kernel) EXPECT_GT(v, 0) << entry.name;
      // any extra edge makes the form indefinite
      for (std::size_t i = 0; i < entry.graph.size(); ++i)
        for (std::size_t j = i + 1; j < entry.graph.size(); ++j) {
          auto g = entry.graph;
          g.add_edge(i, j);
          EXPECT_EQ(recognize_graph(g).family, GraphFamily::Other) << entry.name << " + " << i << "-" << j;
          ++augmented;
        }
    }
  }
  EXPECT_GT(augmented, 100u);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(RecognizeGraph, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const auto& entry : graphs::catalogue(8)) {
    std::vector<std::size_t> perm(entry.graph.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(recognize_graph(entry.graph.permuted(perm)).label(), recognize_graph(entry.graph).label()) << entry.name;
    }
  }
  std::vector<std::size_t> perm{2, 0, 3, 1};
  EXPECT_EQ(recognize_graph(complete(4).permuted(perm)).label(), "Other");
}

TEST(AlgebraType, Examples) {
  EXPECT_EQ(algebra_type(*built(corpus::truncated_polynomial(Q, 3))).type.label(), "Dynkin(A2)");
  EXPECT_EQ(algebra_type(*lambda("2")).type.label(), "ExtendedDynkin(~A1)");
  auto delta = trivial_extension(built(corpus::kronecker(Q)));
  auto t = algebra_type(*delta.algebra);
  EXPECT_EQ(t.type.label(), "ExtendedDynkin(~A1)");
  EXPECT_EQ(t.components.size(), 2u);
}

TEST(DecideFg, QuantumExteriorFamily) {
  auto no = decide_fg(lambda("2"));
  EXPECT_EQ(no.answer, FgAnswer::No);
  ASSERT_FALSE(no.reasons.empty());
  EXPECT_NE(no.reasons.back().outcome.find("-2 is not a root of unity"), std::string::npos) << no.reasons.back().outcome;

  auto one = decide_fg(lambda("1"));
  EXPECT_EQ(one.answer, FgAnswer::Yes);
  ASSERT_TRUE(one.outer.has_value());
  EXPECT_EQ(one.outer->to_string(), "Finite(2)");

  EXPECT_EQ(decide_fg(lambda("-1")).answer, FgAnswer::Yes);

  auto f5 = decide_fg(lambda("2", F5));
  EXPECT_EQ(f5.answer, FgAnswer::Yes);
  EXPECT_EQ(f5.outer->to_string(), "Finite(4)");
}

TEST(DecideFg, OtherExamples) {
  auto x3 = decide_fg(built(corpus::truncated_polynomial(Q, 3)));
  EXPECT_EQ(x3.answer, FgAnswer::Yes);
  EXPECT_EQ(x3.type, std::optional<std::string>("Dynkin(A2)"));
  EXPECT_EQ(x3.reasons.back().clause, "Dynkin type gives (Fg)");

  auto x2 = decide_fg(built(corpus::truncated_polynomial(Q, 2)));
  EXPECT_EQ(x2.answer, FgAnswer::Yes);
  EXPECT_EQ(x2.reasons.back().check, "radical-square-zero");

  EXPECT_EQ(code_of([&] { decide_fg(built(corpus::path_a2(Q))); }), ErrorCode::NotSelfInjective);
  EXPECT_EQ(code_of([&] { decide_fg(built(corpus::truncated_polynomial(Q, 4))); }), ErrorCode::OutOfScope);

  Field f2(FieldDescriptor::prime(2));
  auto c2 = decide_fg(lambda("1", f2));
  EXPECT_EQ(c2.answer, FgAnswer::Unknown);
  EXPECT_FALSE(c2.hypothesis_failures.empty());

  auto wild = decide_fg(trivial_extension(hereditary({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}})).algebra);
  EXPECT_EQ(wild.answer, FgAnswer::No);
  EXPECT_EQ(wild.type, std::optional<std::string>("Other"));
}

TEST(DecideFg, PrimeFieldAffineANeverNo) {
  for (std::uint64_t p : {3, 5, 7}) {
    Field f(FieldDescriptor::prime(p));
    for (std::uint64_t q = 1; q < p; ++q) {
      auto v = decide_fg(lambda(std::to_string(q), f));
      EXPECT_NE(v.answer, FgAnswer::No) << "p=" << p << " q=" << q;
    }
  }
}

TEST(DecideFg, TrivialExtensionsOfTameHereditaryAlgebras) {
  std::vector<AlgebraPtr> tame = {
      built(corpus::kronecker(Q)),
      hereditary({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "3", "2"}, {"c", "3", "4"}, {"d", "1", "4"}}),
      hereditary({"0", "1", "2", "3", "4"}, {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "0", "3"}, {"d", "0", "4"}}),
  };
  for (const auto& a : tame) {
    auto v = decide_fg(trivial_extension(a).algebra);
    EXPECT_EQ(v.answer, FgAnswer::Yes) << (v.type ? *v.type : "?");
    bool reached_outer = false;
    for (const auto& r : v.reasons) reached_outer = reached_outer || r.check == "outer-order";
    bool affine_a = v.type && v.type->find("~A") != std::string::npos;
    EXPECT_EQ(reached_outer, affine_a);
  }
}

TEST(DecideFg, DisconnectedInputGivesBlockVerdicts) {
  Presentation p{Q,
                 Quiver({"1", "2"}, {{"x", "1", "1"}, {"u", "2", "2"}, {"v", "2", "2"}}),
                 {corpus::relation(Q, {{"1", {"u", "u"}}}), corpus::relation(Q, {{"1", {"v", "v"}}}),
                  corpus::relation(Q, {{"1", {"u", "v"}}, {"2", {"v", "u"}}})},
                 3};
  auto v = decide_fg(built(p));
  ASSERT_EQ(v.blocks.size(), 2u);
  EXPECT_EQ(v.answer, FgAnswer::No);
  std::vector<FgAnswer> got{v.blocks[0].answer, v.blocks[1].answer};
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<FgAnswer>{FgAnswer::Yes, FgAnswer::No}));
}

TEST(DecideFg, NonBasicInputIsBasified) {
  auto d = share(double_construction(*built(corpus::truncated_polynomial(Q, 3))));
  auto v = decide_fg(d);
  EXPECT_EQ(v.answer, FgAnswer::Yes);
  ASSERT_FALSE(v.notices.empty());
  EXPECT_EQ(v.reasons.front().check, "basic");
}
