#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "qhrigid/path_algebra.hpp"

using namespace qhr;
using qhr::test::bundled;

namespace {

std::set<std::string> basis_names(const Algebra& a) {
  std::set<std::string> out;
  for (const auto& p : a.basis()) out.insert(path_name(a.quiver(), p));
  return out;
}

}  // namespace

TEST(PathAlgebra, Sl2BlockBasis) {
  const auto a = bundled("sl2block");
  EXPECT_EQ(a->dim(), 5u);
  EXPECT_EQ(basis_names(*a), (std::set<std::string>{"e1", "e2", "a", "b", "a.b"}));
}

TEST(PathAlgebra, FieldCase) {
  const Algebra a = build_algebra(parse_alg_string("field 0\nvertex 1\n"));
  EXPECT_EQ(a.dim(), 1u);
}

TEST(PathAlgebra, TruncatedLoop) {
  const auto a = bundled("loop");
  EXPECT_EQ(a->dim(), 2u);
  ASSERT_EQ(a->radical_powers().size(), 3u);
  EXPECT_EQ(a->radical_powers()[1].dim(), 1u);
  EXPECT_TRUE(a->radical_powers()[2].is_zero());
}

TEST(PathAlgebra, Sl2BlockRadicalPowers) {
  const auto a = bundled("sl2block");
  const auto& j = a->radical_powers();
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0].dim(), 5u);
  EXPECT_EQ(j[1].dim(), 3u);
  EXPECT_EQ(j[2].dim(), 1u);
  EXPECT_TRUE(j[3].is_zero());
}

TEST(PathAlgebra, SemisimpleHasZeroRadical) {
  const auto a = bundled("semisimple");
  EXPECT_EQ(a->dim(), 2u);
  EXPECT_TRUE(a->radical_powers().at(1).is_zero());
}

TEST(PathAlgebra, MultiplicationFollowsPathOrder) {
  const auto a = bundled("sl2block");
  const Quiver& q = a->quiver();
  const auto pa = a->reduce(Path{0, 1, {*q.find_arrow("a")}});
  const auto pb = a->reduce(Path{1, 0, {*q.find_arrow("b")}});
  ASSERT_EQ(pa.size(), 1u);
  ASSERT_EQ(pb.size(), 1u);
  const Vec ab = a->multiply(a->basis_vector(pa[0].first), a->basis_vector(pb[0].first));
  const Vec ba = a->multiply(a->basis_vector(pb[0].first), a->basis_vector(pa[0].first));
  EXPECT_FALSE(is_zero(ab));
  EXPECT_TRUE(is_zero(ba));
}

TEST(PathAlgebra, CommutativityRelationInZigzag) {
  const auto a = bundled("zigzag3");
  const Quiver& q = a->quiver();
  const Path p1{1, 1, {*q.find_arrow("be1"), *q.find_arrow("al1")}};
  const Path p2{1, 1, {*q.find_arrow("al2"), *q.find_arrow("be2")}};
  const auto r1 = a->reduce(p1), r2 = a->reduce(p2);
  ASSERT_EQ(r1.size(), 1u);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r1[0].first, r2[0].first);
  EXPECT_EQ(a->field().add(r1[0].second, r2[0].second), 0);
}

TEST(PathAlgebra, DualityIsAnAntiInvolution) {
  const auto a = bundled("zigzag3");
  ASSERT_TRUE(a->has_duality());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) {
      const Vec x = a->basis_vector(i), y = a->basis_vector(j);
      EXPECT_EQ(a->dual(a->dual(x)), x);
      EXPECT_EQ(a->dual(a->multiply(x, y)), a->multiply(a->dual(y), a->dual(x)));
    }
}

TEST(PathAlgebra, OppositeHasSameDimension) {
  const auto a = bundled("stretched");
  EXPECT_EQ(a->opposite().dim(), a->dim());
}

TEST(AlgParser, ReportsLineNumbers) {
  try {
    (void)parse_alg_string("field 0\nvertex 1 2\narrow a 1 3\n", "bad.alg");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("bad.alg:3"), std::string::npos);
  }
}

TEST(AlgParser, RejectsMalformedInput) {
  EXPECT_THROW((void)parse_alg_string("field 4\nvertex 1\n"), InputError);
  EXPECT_THROW((void)parse_alg_string("field 0\nvertex 1\nfrobnicate\n"), InputError);
  EXPECT_THROW((void)parse_alg_string("field 0\nvertex 1\narrow x 1 1\nrelation 1*y.y\n"), InputError);
}

TEST(AlgParser, RationalCoefficients) {
  const auto spec = parse_alg_string("field 0\nvertex 1\narrow x 1 1\narrow y 1 1\nrelation 1/2*x.y + -3*y.x\n");
  ASSERT_EQ(spec.relations.size(), 1u);
  EXPECT_EQ(spec.relations[0].terms[0].coeff, Rational(1, 2));
}

TEST(PathAlgebra, InfiniteDimensionalIsRejected) {
  EXPECT_THROW((void)build_algebra(parse_alg_string("field 0\nvertex 1\narrow x 1 1\n"), 50), InputError);
}

TEST(PathAlgebra, FieldOverride) {
  const auto a = bundled("zigzag3", 3);
  EXPECT_EQ(a->field().characteristic(), 3u);
  EXPECT_EQ(a->dim(), bundled("zigzag3")->dim());
  EXPECT_THROW((void)bundled("zigzag3", 4), InputError);
}
