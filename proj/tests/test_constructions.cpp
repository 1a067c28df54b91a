#include "qalg/constructions.hpp"

#include "support.hpp"

using namespace qalg;
using namespace qalg::testing;

namespace {

AlgebraPtr lambda(const std::string& q, const Field& f = Q) { return built(corpus::quantum_exterior(f, q)); }

AlgebraMorphism nakayama(const AlgebraPtr& a) { return nakayama_from_form(*find_frobenius_form(a).form); }

AlgebraMorphism negate_arrows(const AlgebraPtr& a) {
  ArrowMap m;
  for (const auto& l : a->basis())
    if (l.kind == BasisLabel::Kind::Path && l.path.size() == 1) m.arrows[l.path[0]] = {{-a->field().one(), l.path[0]}};
  return morphism_from_arrow_map(a, m);
}

bool commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.product_vector(i, j) == a.product_vector(j, i))) return false;
  return true;
}

std::vector<AlgebraPtr> graded_corpus() {
  return {built(corpus::point(Q)),          built(corpus::truncated_polynomial(Q, 2)),
          built(corpus::truncated_polynomial(Q, 3)), lambda("1"),
          lambda("2"),                      lambda("-3/4"),
          built(corpus::kronecker(Q)),      built(corpus::path_a2(Q)),
          built(corpus::two_points(Q)),     lambda("2", F5)};
}

}  // namespace

TEST(GroupAction, RejectsBadData) {
  auto a = lambda("2");
  auto nu = nakayama(a);
  // nu has infinite order, so Z2 cannot act through it
  GroupAction g{a, {"1", "g"}, {{0, 1}, {1, 0}}, {AlgebraMorphism::identity(a), nu}};
  EXPECT_EQ(code_of([&] { g.verify(); }), ErrorCode::ActionMismatch);
  GroupAction bad{a, {"1", "g"}, {{0, 1}, {1, 1}}, {AlgebraMorphism::identity(a), AlgebraMorphism::identity(a)}};
  EXPECT_EQ(code_of([&] { bad.verify(); }), ErrorCode::ActionMismatch);
  EXPECT_NO_THROW(cyclic_action(nakayama(lambda("1")), 2));
}

TEST(SkewGroupAlgebra, Examples) {
  auto k = built(corpus::point(Q));
  auto kz2 = skew_group_algebra(cyclic_action(AlgebraMorphism::identity(k), 2));
  EXPECT_EQ(kz2.dim(), 2u);
  EXPECT_TRUE(commutative(kz2));
  EXPECT_EQ(kz2.product_vector(1, 1), kz2.one());

  auto x3 = built(corpus::truncated_polynomial(Q, 3));
  auto sk = share(skew_group_algebra(cyclic_action(negate_arrows(x3), 2)));
  EXPECT_EQ(sk->dim(), 6u);
  EXPECT_TRUE(check_algebra(*sk).empty());
  // (1 + g)/2 and (1 - g)/2 are orthogonal idempotents summing to 1
  Vector g = sk->zero();
  g[3 + vertex(*x3, "1")] = Q.one();
  Vector plus = scale(add(sk->one(), g), s("1/2")), minus = scale(add(sk->one(), scale(g, -Q.one())), s("1/2"));
  EXPECT_EQ(sk->multiply(plus, plus), plus);
  EXPECT_EQ(sk->multiply(minus, minus), minus);
  EXPECT_TRUE(is_zero(sk->multiply(plus, minus)));
  EXPECT_EQ(basic_idempotent(*sk).parts.size(), 2u);

  auto l1 = lambda("1");
  EXPECT_EQ(skew_group_algebra(cyclic_action(nakayama(l1), 2)).dim(), 8u);
}

TEST(SkewGroupAlgebra, DimensionIsGroupOrderTimesDimension) {
  for (const auto& a : graded_corpus()) {
    auto sk = skew_group_algebra(cyclic_action(AlgebraMorphism::identity(a), 3));
    EXPECT_EQ(sk.dim(), 3 * a->dim());
    EXPECT_TRUE(check_algebra(sk).empty());
  }
}

TEST(SkewGroupForm, Examples) {
  auto k = built(corpus::point(Q));
  auto act = cyclic_action(AlgebraMorphism::identity(k), 2);
  auto kz2 = share(skew_group_algebra(act));
  auto b = skew_group_form(trace_form(k), act, kz2);
  EXPECT_EQ(b.gram, Matrix::identity(Q, 2));

  auto l1 = lambda("1");
  auto act1 = cyclic_action(nakayama(l1), 2);
  auto sk = share(skew_group_algebra(act1));
  auto b1 = skew_group_form(trace_form(l1), act1, sk);
  EXPECT_EQ(b1.gram.rows(), 8u);
  EXPECT_TRUE(b1.nondegenerate);
  EXPECT_TRUE(is_associative(b1));

  auto a2 = built(corpus::path_a2(Q));
  auto acta2 = cyclic_action(AlgebraMorphism::identity(a2), 2);
  auto ska2 = share(skew_group_algebra(acta2));
  EXPECT_EQ(code_of([&] { skew_group_form(trace_form(a2), acta2, ska2); }), ErrorCode::DegenerateInput);
}

TEST(SkewGroupSymmetric, Examples) {
  auto r1 = skew_group_symmetric_check(trace_form(lambda("1")));
  EXPECT_EQ(r1.group_order, 2u);
  EXPECT_TRUE(r1.witness_verified);
  EXPECT_TRUE(r1.symmetric);

  auto r0 = skew_group_symmetric_check(trace_form(built(corpus::truncated_polynomial(Q, 3))));
  EXPECT_EQ(r0.group_order, 1u);
  EXPECT_TRUE(r0.symmetric);

  auto r5 = skew_group_symmetric_check(trace_form(lambda("2", F5)));
  EXPECT_EQ(r5.group_order, 4u);
  EXPECT_EQ(r5.skew->dim(), 16u);
  EXPECT_TRUE(r5.symmetric);

  EXPECT_EQ(code_of([&] { skew_group_symmetric_check(trace_form(lambda("2"))); }), ErrorCode::InfiniteOrder);

  // over F2 the vertex swap of a twisted extension of k x k has order 2
  Field f2(FieldDescriptor::prime(2));
  auto kk = built(corpus::two_points(f2));
  ArrowMap swap;
  swap.vertices = {{"1", "2"}, {"2", "1"}};
  auto te = twisted_trivial_extension(kk, morphism_from_arrow_map(kk, swap));
  EXPECT_EQ(code_of([&] { skew_group_symmetric_check(te.form); }), ErrorCode::CharDividesOrder);
}

TEST(SmashZ2, Examples) {
  auto k = smash_z2(*built(corpus::point(Q)));
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_EQ(k.unit_idempotents().size(), 2u);
  EXPECT_TRUE(commutative(k));

  auto x3 = smash_z2(*built(corpus::truncated_polynomial(Q, 3)));
  EXPECT_EQ(x3.dim(), 6u);
  Quiver qv = quiver_of(x3);
  EXPECT_EQ(qv.vertices().size(), 2u);
  auto mult = qv.multiplicities();
  EXPECT_EQ(mult[0][1], 1u);
  EXPECT_EQ(mult[1][0], 1u);
  EXPECT_EQ(mult[0][0], 0u);

  EXPECT_EQ(smash_z2(*lambda("3")).dim(), 8u);
}

TEST(SmashZ2, Errors) {
  EXPECT_EQ(code_of([&] { smash_z2(lambda("2")->without_grading()); }), ErrorCode::NotGraded);
  EXPECT_EQ(code_of([&] { smash_z2(*built(corpus::truncated_polynomial(Q, 4))); }), ErrorCode::TopDegreeTooHigh);
}

TEST(SmashZ2, ActionIsAGroupAction) {
  auto sm = share(smash_z2(*lambda("2")));
  auto act = smash_z2_action(sm);
  EXPECT_EQ(act.order(), 2u);
  EXPECT_FALSE(act.automorphisms[1].is_identity());
}

TEST(QuasiVeronese, Examples) {
  auto x3 = built(corpus::truncated_polynomial(Q, 3));
  auto v = quasi_veronese2(*x3);
  EXPECT_EQ(v.dim(), 6u);
  EXPECT_TRUE(check_algebra(v).empty());
  std::size_t e00 = idx(v, BasisLabel::matrix(0, 0, x3->label(vertex(*x3, "1"))));
  std::size_t e11 = idx(v, BasisLabel::matrix(1, 1, x3->label(vertex(*x3, "1"))));
  EXPECT_EQ(v.product_vector(e00, e00), v.basis_vector(e00));
  EXPECT_TRUE(is_zero(v.product_vector(e00, e11)));

  auto l = lambda("2");
  auto vl = quasi_veronese2(*l);
  EXPECT_EQ(vl.dim(), 8u);
  EXPECT_EQ(vl.unit_idempotents().size(), 2u);
}

TEST(VeroneseSmashIso, HoldsForEveryGradedInput) {
  for (const auto& a : graded_corpus()) {
    auto v = share(quasi_veronese2(*a));
    auto sm = share(smash_z2(*a));
    EXPECT_EQ(v->dim(), 2 * a->dim());
    EXPECT_EQ(sm->dim(), 2 * a->dim());
    auto phi = veronese_smash_iso(v, sm);
    EXPECT_FALSE(morphism_defect(phi).has_value());
  }
}

TEST(TrivialExtension, Examples) {
  auto k = trivial_extension(built(corpus::point(Q)));
  EXPECT_EQ(k.algebra->dim(), 2u);
  EXPECT_TRUE(commutative(*k.algebra));
  EXPECT_TRUE(is_zero(k.algebra->product_vector(1, 1)));

  auto a2 = trivial_extension(built(corpus::path_a2(Q)));
  EXPECT_EQ(a2.algebra->dim(), 6u);
  EXPECT_EQ(loewy_length(*a2.algebra), 3u);

  auto kr = trivial_extension(built(corpus::kronecker(Q)));
  EXPECT_EQ(kr.algebra->dim(), 8u);
  auto mult = quiver_of(*kr.algebra).multiplicities();
  EXPECT_EQ(mult[0][1], 2u);
  EXPECT_EQ(mult[1][0], 2u);
}

TEST(TrivialExtension, SymmetricForEveryCorpusAlgebra) {
  for (const auto& a : graded_corpus()) {
    auto te = trivial_extension(a);
    EXPECT_EQ(te.algebra->dim(), 2 * a->dim());
    EXPECT_TRUE(check_algebra(*te.algebra).empty());
    EXPECT_TRUE(te.form.nondegenerate);
    EXPECT_TRUE(is_associative(te.form));
    EXPECT_EQ(te.form.gram, te.form.gram.transpose());
    EXPECT_TRUE(is_symmetric(te.algebra).symmetric);
  }
}

TEST(TwistedTrivialExtension, IdentityTwistIsTheTrivialExtension) {
  auto a = built(corpus::kronecker(Q));
  auto plain = trivial_extension(a);
  auto tw = twisted_trivial_extension(a, AlgebraMorphism::identity(a));
  for (std::size_t i = 0; i < plain.algebra->dim(); ++i)
    for (std::size_t j = 0; j < plain.algebra->dim(); ++j)
      EXPECT_EQ(plain.algebra->product_vector(i, j), tw.algebra->product_vector(i, j));
  EXPECT_TRUE(tw.nakayama->is_identity());
}

TEST(TwistedTrivialExtension, ArrowSwapOfKronecker) {
  auto a = built(corpus::kronecker(Q));
  ArrowMap m;
  m.arrows["a"] = {{Q.one(), "b"}};
  m.arrows["b"] = {{Q.one(), "a"}};
  auto tw = twisted_trivial_extension(a, morphism_from_arrow_map(a, m));
  auto nu = nakayama_from_form(*find_frobenius_form(tw.algebra).form);
  EXPECT_TRUE(is_inner(nu.after(tw.nakayama->inverse())).inner());
  EXPECT_TRUE(is_weakly_symmetric(nu));
}

TEST(TwistedTrivialExtension, VertexSwapOfTwoPoints) {
  auto kk = built(corpus::two_points(Q));
  ArrowMap swap;
  swap.vertices = {{"1", "2"}, {"2", "1"}};
  auto tw = twisted_trivial_extension(kk, morphism_from_arrow_map(kk, swap));
  EXPECT_EQ(tw.algebra->dim(), 4u);
  auto nu = nakayama_from_form(*find_frobenius_form(tw.algebra).form);
  EXPECT_FALSE(is_weakly_symmetric(nu));
  EXPECT_FALSE(is_weakly_symmetric(*tw.nakayama));
}

TEST(TwistedTrivialExtension, AttachedNakayamaSatisfiesGramRelation) {
  for (const char* q : {"1", "2", "-1/3"}) {
    auto a = lambda(q);
    for (const auto& sigma : {nakayama(a), negate_arrows(a), AlgebraMorphism::identity(a)}) {
      auto tw = twisted_trivial_extension(a, sigma);
      EXPECT_TRUE(check_algebra(*tw.algebra).empty());
      const Algebra& d = *tw.algebra;
      for (std::size_t i = 0; i < d.dim(); ++i)
        for (std::size_t j = 0; j < d.dim(); ++j)
          EXPECT_EQ(tw.form(d.basis_vector(i), d.basis_vector(j)), tw.form(d.basis_vector(j), tw.nakayama->image(i)));
    }
  }
}

TEST(TwistedTrivialExtension, InnerTwistGivesIsomorphicExtensions) {
  auto a = lambda("1");
  std::size_t x = path(*a, {"x"});
  Vector u = a->one(), uinv = a->one();
  u[x] = Q.one();
  uinv[x] = -Q.one();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < a->dim(); ++i) images.push_back(a->multiply(a->multiply(u, a->basis_vector(i)), uinv));
  auto sigma = linear_map(a, a, images);
  for (const auto& pi : {AlgebraMorphism::identity(a), nakayama(a)}) {
    auto sp = twisted_trivial_extension(a, sigma.after(pi));
    auto p = twisted_trivial_extension(a, pi);
    auto phi = inner_twist_iso(sp, p, u);
    EXPECT_FALSE(morphism_defect(phi).has_value());
    // the witness found by is_inner works as well
    auto w = is_inner(sigma);
    ASSERT_TRUE(w.inner());
    EXPECT_NO_THROW(inner_twist_iso(sp, p, w.witness));
  }
}

TEST(Beilinson, Examples) {
  auto x3 = beilinson(*built(corpus::truncated_polynomial(Q, 3)));
  EXPECT_EQ(x3.dim(), 3u);
  auto m = quiver_of(x3).multiplicities();
  EXPECT_EQ(m[0][1], 1u);
  EXPECT_EQ(m[1][0], 0u);

  auto l = beilinson(*lambda("2"));
  EXPECT_EQ(l.dim(), 4u);
  auto ml = quiver_of(l).multiplicities();
  EXPECT_EQ(ml[0][1], 2u);

  for (const auto& a : graded_corpus()) {
    auto b = beilinson(*a);
    EXPECT_EQ(b.dim(), 2 * a->indices_of_degree(0).size() + a->indices_of_degree(1).size());
    EXPECT_TRUE(check_algebra(b).empty());
  }
  EXPECT_EQ(code_of([&] { beilinson(lambda("2")->without_grading()); }), ErrorCode::NotGraded);
}

TEST(SeparatedQuiver, Examples) {
  auto x2 = separated_quiver(*built(corpus::truncated_polynomial(Q, 2)));
  EXPECT_EQ(x2.vertices().size(), 2u);
  ASSERT_EQ(x2.arrows().size(), 1u);
  EXPECT_EQ(x2.arrows()[0].source, "1");
  EXPECT_EQ(x2.arrows()[0].target, "1'");

  auto ls = separated_quiver(quotient_by_socle(*lambda("2")));
  EXPECT_EQ(ls.vertices().size(), 2u);
  EXPECT_EQ(ls.arrows().size(), 2u);

  auto ss = separated_quiver(*built(corpus::two_points(Q)));
  EXPECT_EQ(ss.vertices().size(), 4u);
  EXPECT_TRUE(ss.arrows().empty());

  EXPECT_EQ(code_of([&] { separated_quiver(*lambda("2")); }), ErrorCode::RadicalSquareNotZero);
}

TEST(DoubleConstruction, Examples) {
  auto x3 = built(corpus::truncated_polynomial(Q, 3));
  auto d = double_construction(*x3);
  EXPECT_EQ(d.dim(), 12u);
  auto m = double_morita_check(*x3, d);
  EXPECT_EQ(m.basic_dim, 3u);
  EXPECT_EQ(m.basic_quiver.arrows().size(), 1u);
  EXPECT_TRUE(m.quivers_match);

  auto k = built(corpus::point(Q));
  auto dk = double_construction(*k);
  EXPECT_EQ(dk.dim(), 4u);
  EXPECT_EQ(double_morita_check(*k, dk).basic_dim, 1u);

  auto l1 = lambda("1");
  auto dl = double_construction(*l1);
  EXPECT_EQ(dl.dim(), 16u);
  auto ml = double_morita_check(*l1, dl);
  EXPECT_EQ(ml.basic_quiver.vertices().size(), 1u);
  EXPECT_EQ(ml.basic_quiver.arrows().size(), 2u);
  EXPECT_TRUE(ml.quivers_match);

  Field f2(FieldDescriptor::prime(2));
  EXPECT_EQ(code_of([&] { double_construction(*built(corpus::point(f2))); }), ErrorCode::CharTwo);
}

TEST(VeroneseIdentification, QuasiVeroneseIsTwistedExtensionOfBeilinson) {
  for (const auto& a : {built(corpus::truncated_polynomial(Q, 3)), lambda("1"), lambda("2"), lambda("-5/7"),
                        lambda("2", F5)}) {
    auto id = veronese_as_trivial_extension(a, trace_form(a));
    EXPECT_FALSE(morphism_defect(id.iso).has_value());
    EXPECT_EQ(id.extension.algebra->dim(), id.veronese->dim());
  }
}
