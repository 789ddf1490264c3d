#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace qhr;
using qhr::test::mat;
using qhr::test::vec;

TEST(Rref, ZeroMatrixIsFixed) {
  const Field q(0);
  const Mat z(q, 2, 2);
  const auto r = rref(z);
  EXPECT_EQ(r.reduced, z);
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, IdentityIsFixed) {
  const Field q(0);
  const Mat id = Mat::identity(q, 3);
  const auto r = rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, AllOnesOverF2) {
  const Field f2(2);
  const auto r = rref(mat(f2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.reduced, mat(f2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, RationalEntries) {
  const Field q(0);
  Mat m(q, 2, 2);
  m.set(0, 0, Rational(1, 2));
  m.set(0, 1, Rational(1, 3));
  m.set(1, 0, Rational(1, 4));
  m.set(1, 1, Rational(1, 6));
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rref(m).reduced(0, 1), Rational(2, 3));
}

TEST(Field, ArithmeticModP) {
  const Field f7(7);
  EXPECT_EQ(f7.reduce(Rational(-1)), Rational(6));
  EXPECT_EQ(f7.reduce(Rational(1, 3)), Rational(5));
  EXPECT_EQ(f7.mul(f7.inv(Rational(3)), Rational(3)), Rational(1));
  EXPECT_THROW(Field(4), std::invalid_argument);
  EXPECT_THROW((void)f7.reduce(Rational(1, 7)), std::domain_error);
}

TEST(Subspace, IntersectionWithItself) {
  const Field q(0);
  const auto u = Subspace::span(q, 3, {vec({1, 2, 3}), vec({0, 1, 1})});
  EXPECT_EQ(u.intersect(u), u);
  EXPECT_EQ(u + u, u);
}

TEST(Subspace, CoordinateAxes) {
  const Field q(0);
  const auto u = Subspace::span(q, 2, {vec({1, 0})});
  const auto v = Subspace::span(q, 2, {vec({0, 1})});
  EXPECT_EQ(u + v, Subspace::full(q, 2));
  EXPECT_TRUE(u.intersect(v).is_zero());
}

TEST(Subspace, DiagonalsMeetInZeroOverQ) {
  const Field q(0);
  const auto u = Subspace::span(q, 2, {vec({1, 1})});
  const auto v = Subspace::span(q, 2, {vec({1, -1})});
  EXPECT_TRUE(u.intersect(v).is_zero());
}

TEST(Subspace, DiagonalsCoincideOverF2) {
  const Field f2(2);
  const auto u = Subspace::span(f2, 2, {vec({1, 1})});
  const auto v = Subspace::span(f2, 2, {vec({1, -1})});
  EXPECT_EQ(u, v);
}

TEST(Subspace, AnnihilatorAndComplement) {
  const Field q(0);
  const auto u = Subspace::span(q, 3, {vec({1, 1, 0})});
  const auto ann = u.annihilator();
  EXPECT_EQ(ann.dim(), 2u);
  for (const auto& y : ann.basis()) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 3; ++i) dot += y[i] * u.basis()[0][i];
    EXPECT_EQ(dot, 0);
  }
  const auto w = Subspace::span(q, 3, {vec({1, 1, 0}), vec({0, 0, 1})});
  const auto ext = u.complement_in(w);
  ASSERT_EQ(ext.size(), 1u);
  EXPECT_EQ(u + Subspace::span(q, 3, ext), w);
}

TEST(Solve, InconsistentSystem) {
  const Field q(0);
  const Mat m = mat(q, {{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(m, vec({1, 2})).has_value());
  const auto x = solve(m, vec({3, 3}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m * *x, vec({3, 3}));
}

TEST(Inverse, SingularAndRegular) {
  const Field f3(3);
  EXPECT_FALSE(inverse(mat(f3, {{1, 2}, {2, 1}})).has_value());
  const Mat m = mat(f3, {{1, 1}, {0, 1}});
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Mat::identity(f3, 2));
}

namespace {

Mat random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const long x = f.is_rational() ? static_cast<long>(rng() % 7) - 3 : static_cast<long>(rng() % f.characteristic());
      // sparse-ish so that rank deficiency occurs
      m.set(i, j, rng() % 3 == 0 ? Rational(0) : Rational(x));
    }
  return m;
}

}  // namespace

// Seeded randomized properties, one parameter per field.
class RandomLinalg : public ::testing::TestWithParam<unsigned long> {};

TEST_P(RandomLinalg, RankNullityAndCanonicity) {
  const Field f(GetParam());
  std::mt19937_64 rng(1000 + GetParam());
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const Mat m = random_matrix(rng, f, r, c);
    const auto red = rref(m);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(red.rank() + ker.size(), c);
    for (const auto& k : ker) EXPECT_TRUE(is_zero(m * k));
    EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
    // Row operations do not change the RREF.
    Mat e = Mat::identity(f, r);
    if (r > 1) e.set(0, 1, Rational(1));
    EXPECT_EQ(rref(e * m).reduced, red.reduced);
  }
}

TEST_P(RandomLinalg, DimensionFormula) {
  const Field f(GetParam());
  std::mt19937_64 rng(2000 + GetParam());
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Mat a = random_matrix(rng, f, 1 + rng() % 4, n);
    const Mat b = random_matrix(rng, f, 1 + rng() % 4, n);
    std::vector<Vec> ra, rb;
    for (std::size_t i = 0; i < a.rows(); ++i) ra.push_back(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) rb.push_back(b.row(i));
    const auto u = Subspace::span(f, n, ra), v = Subspace::span(f, n, rb);
    EXPECT_EQ((u + v).dim() + u.intersect(v).dim(), u.dim() + v.dim());
    EXPECT_TRUE((u + v).contains(u));
    EXPECT_TRUE(u.contains(u.intersect(v)));
    EXPECT_EQ(u.annihilator().dim(), n - u.dim());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RandomLinalg, ::testing::Values(0ul, 2ul, 3ul, 7ul));
