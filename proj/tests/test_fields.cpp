#include <gtest/gtest.h>

#include <random>

#include "qalg/field.hpp"
#include "qalg/linalg.hpp"

using namespace qalg;

namespace {

const Field Q{FieldDescriptor::rationals()};
const Field F5{FieldDescriptor::prime(5)};
const Field F7{FieldDescriptor::prime(7)};
const Field Z3{FieldDescriptor::cyclotomic(3)};

Scalar q(const char* s) { return parse_scalar(s, Q); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InternalInconsistency;
}

// Independent check: powers of s until 1, plain loop.
std::uint64_t brute_order(const Scalar& s, std::uint64_t cap) {
  Scalar p = s;
  for (std::uint64_t n = 1; n <= cap; ++n, p = p * s)
    if (p == s.field().one()) return n;
  return 0;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  if (f.kind() == FieldKind::Cyclotomic) {
    Scalar s = f.zero();
    Scalar z = f.generator();
    for (int e = 0; e < 5; ++e) s += f.from_rational(Rational(num(rng), den(rng))) * z.pow(e);
    return s;
  }
  if (f.kind() == FieldKind::Prime) return f.from_int(num(rng));
  return f.from_rational(Rational(num(rng), den(rng)));
}

}  // namespace

TEST(FieldDescriptor, ParsesNames) {
  EXPECT_EQ(FieldDescriptor::parse("Q"), FieldDescriptor::rationals());
  EXPECT_EQ(FieldDescriptor::parse("F5"), FieldDescriptor::prime(5));
  EXPECT_EQ(FieldDescriptor::parse("Q(z3)"), FieldDescriptor::cyclotomic(3));
  EXPECT_EQ(FieldDescriptor::prime(7).characteristic(), 7u);
  EXPECT_EQ(FieldDescriptor::cyclotomic(5).characteristic(), 0u);
  EXPECT_EQ(code_of([] { FieldDescriptor::prime(6); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { FieldDescriptor::cyclotomic(2); }), ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] { FieldDescriptor::parse("R"); }), ErrorCode::InvalidField);
}

TEST(ParseScalar, ReducesFractions) {
  Scalar s = parse_scalar("-3/6", Q);
  EXPECT_EQ(s, Q.from_rational(Rational(-1, 2)));
  EXPECT_EQ(s.to_string(), "-1/2");
}

TEST(ParseScalar, ReducesModP) { EXPECT_EQ(parse_scalar("7", F5).residue(), 2); }

TEST(ParseScalar, ReducesModCyclotomicPolynomial) {
  EXPECT_TRUE(parse_scalar("z^3", Z3).is_one());
  // z^2 = -1 - z modulo x^2 + x + 1
  EXPECT_EQ(parse_scalar("z^2", Z3), parse_scalar("-1-z", Z3));
  EXPECT_EQ(parse_scalar("2*z^4", Z3), parse_scalar("2*z", Z3));
}

TEST(ParseScalar, Errors) {
  EXPECT_EQ(code_of([] { parse_scalar("1/0", Q); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { parse_scalar("z", Q); }), ErrorCode::WrongField);
  EXPECT_EQ(code_of([] { parse_scalar("1..2", Q); }), ErrorCode::MalformedScalar);
  EXPECT_EQ(code_of([] { parse_scalar("", Q); }), ErrorCode::MalformedScalar);
  EXPECT_EQ(code_of([] { parse_scalar("z", F5); }), ErrorCode::WrongField);
}

TEST(FieldInvert, Examples) {
  EXPECT_EQ(field_invert(q("2")), q("1/2"));
  EXPECT_EQ(field_invert(F5.from_int(2)).residue(), 3);
  Scalar z = Z3.generator();
  EXPECT_EQ(field_invert(z), parse_scalar("-1-z", Z3));
  EXPECT_EQ(code_of([] { field_invert(Q.zero()); }), ErrorCode::DivisionByZero);
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(Q.one(), 10), Order::finite(1));
  EXPECT_EQ(multiplicative_order(F5.from_int(2), 10), Order::finite(4));
  EXPECT_EQ(multiplicative_order(q("2"), 10), Order::exceeds());
  EXPECT_EQ(code_of([] { multiplicative_order(Q.zero(), 10); }), ErrorCode::ZeroInput);
}

TEST(RootOfUnity, Examples) {
  EXPECT_EQ(is_root_of_unity(q("-1")), std::optional<std::uint64_t>(2));
  EXPECT_EQ(is_root_of_unity(-Z3.generator()), std::optional<std::uint64_t>(6));
  EXPECT_EQ(is_root_of_unity(F7.from_int(3)), std::optional<std::uint64_t>(6));
  EXPECT_EQ(is_root_of_unity(q("2")), std::nullopt);
  EXPECT_EQ(is_root_of_unity(q("1/2")), std::nullopt);
  EXPECT_EQ(is_root_of_unity(parse_scalar("1+z", Z3)), std::optional<std::uint64_t>(6));  // 1+z = -z^2
  EXPECT_EQ(is_root_of_unity(parse_scalar("2*z", Z3)), std::nullopt);
}

TEST(CyclotomicPolynomials, KnownValues) {
  // Phi_12 = x^4 - x^2 + 1, Phi_9 = x^6 + x^3 + 1
  auto p12 = detail::cyclotomic_polynomial(12);
  std::vector<Integer> e12{1, 0, -1, 0, 1};
  EXPECT_EQ(p12, e12);
  auto p9 = detail::cyclotomic_polynomial(9);
  std::vector<Integer> e9{1, 0, 0, 1, 0, 0, 1};
  EXPECT_EQ(p9, e9);
}

class ScalarProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(ScalarProperties, RoundTripInverseAndOrders) {
  Field f(FieldDescriptor::parse(GetParam()));
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar s = random_scalar(f, rng);
    EXPECT_EQ(parse_scalar(s.to_string(), f), s) << s.to_string();
    if (s.is_zero()) continue;
    EXPECT_TRUE((s * field_invert(s)).is_one());
    if (trial % 10 == 0) {
      auto r = is_root_of_unity(s);
      if (f.kind() == FieldKind::Prime) {
        ASSERT_TRUE(r.has_value());
      }
      if (r) {
        EXPECT_EQ(brute_order(s, *r), *r);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, ScalarProperties, ::testing::Values("Q", "F5", "F101", "Q(z3)", "Q(z8)", "Q(z12)"));

TEST(RootOfUnity, AllRootsInCyclotomicField) {
  for (std::uint64_t n : {3, 4, 5, 8, 12}) {
    Field f(FieldDescriptor::cyclotomic(n));
    Scalar z = f.generator();
    for (std::uint64_t k = 0; k < 2 * n; ++k) {
      Scalar s = z.pow(k);
      for (Scalar t : {s, -s}) {
        auto r = is_root_of_unity(t);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r, brute_order(t, 2 * n));
      }
    }
  }
}

TEST(Linalg, KernelRankDeterminantInverse) {
  Matrix m(Q, 3, 3);
  int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Q.from_int(vals[i][j]);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_TRUE(determinant(m).is_zero());
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(k[0])));
  EXPECT_FALSE(inverse(m).has_value());
  m(2, 2) = Q.from_int(10);
  EXPECT_EQ(determinant(m), q("-3"));
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((m * *inv).is_identity());
}

TEST(Linalg, RandomInversesOverFiniteField) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m(F7, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = F7.from_int(static_cast<int>(rng() % 7));
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), !determinant(m).is_zero());
    if (inv) {
      EXPECT_TRUE((*inv * m).is_identity());
    }
  }
}

TEST(Linalg, SubspaceWithColumnPriority) {
  Vector a{q("1"), q("1"), q("0")}, b{q("0"), q("1"), q("1")};
  std::vector<std::size_t> order{2, 1, 0};
  Subspace s = Subspace::span(Q, 3, {a, b}, order);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.pivots(), (std::vector<std::size_t>{2, 1}));
  EXPECT_TRUE(s.contains(Vector{q("1"), q("0"), q("-1")}));
  EXPECT_FALSE(s.contains(Vector{q("1"), q("0"), q("0")}));
  Vector r = s.reduce(Vector{q("0"), q("0"), q("1")});
  EXPECT_TRUE(r[1].is_zero() && r[2].is_zero());
  Coordinatizer c(Q, 3, {a, b});
  auto coords = c.coordinates(Vector{q("2"), q("5"), q("3")});
  EXPECT_EQ(coords, (Vector{q("2"), q("3")}));
}
