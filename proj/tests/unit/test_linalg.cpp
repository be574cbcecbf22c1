#include <gtest/gtest.h>

#include <random>

#include "dialg/linalg.hpp"
#include "support/fixtures.hpp"

using namespace dialg;

namespace {

Matrix M(std::vector<std::vector<int>> rows) {
  std::vector<Vector> rs;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.emplace_back(x);
    rs.push_back(v);
  }
  return Matrix::from_rows(rs);
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("0/5")), "0");
  EXPECT_EQ(format_rational(parse_rational("-4/2")), "-2");
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "a", "1/-2", "--1", "1 /2"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Linalg, RankBasics) {
  EXPECT_EQ(rank(Matrix(0, 0)), 0u);
  EXPECT_EQ(rank(Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(M({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(Matrix(2, 3)), 0u);
}

TEST(Linalg, NullspaceBasics) {
  EXPECT_TRUE(nullspace(Matrix::identity(4)).empty());
  EXPECT_EQ(nullspace(Matrix(2, 3)).size(), 3u);
  const auto k = nullspace(M({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{-1, 1}));
}

TEST(Linalg, InImage) {
  const Vector v{2, -1, 5};
  EXPECT_EQ(*in_image(Matrix::identity(3), v), v);
  EXPECT_FALSE(in_image(Matrix(3, 2), v).has_value());
  EXPECT_EQ(*in_image(M({{1}, {1}}), Vector{2, 2}), (Vector{2}));
  EXPECT_FALSE(in_image(M({{1}, {1}}), Vector{2, 3}).has_value());
}

TEST(Linalg, CohomologyDimension) {
  EXPECT_EQ(cohomology_dim(Matrix(1, 4), Matrix(4, 1)), 4u);
  EXPECT_EQ(cohomology_dim(Matrix::identity(3), Matrix(3, 1)), 0u);
  EXPECT_THROW(cohomology_dim(Matrix::identity(3), Matrix(2, 1)), Error);
  try {
    cohomology_dim(Matrix::identity(2), M({{1}, {0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonComplex);
  }
}

TEST(Linalg, RandomMatrixProperties) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 6), sparse(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
    Matrix m = fixtures::random_matrix(rng, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (sparse(rng) == 0) m(i, j) = 0;
      }
    }
    if (trial % 3 == 0 && r >= 2) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - m(1, j) / 3;
    }
    const std::size_t k = rank(m);
    EXPECT_EQ(k, rank(m.transpose()));
    const auto ker = nullspace(m);
    EXPECT_EQ(k + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m * v));
    const Vector x = fixtures::random_vector(rng, c);
    const auto u = in_image(m, m * x);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(m * *u, m * x);
  }
}

TEST(Linalg, CohomologyInvariantUnderMiddlePermutation) {
  // d_in : K -> K^3 hitting e0 + e1, d_out : K^3 -> K killing e0 + e1 and e2
  const Matrix d_in = M({{1}, {1}, {0}});
  const Matrix d_out = M({{1, -1, 0}});
  EXPECT_EQ(cohomology_dim(d_out, d_in), 1u);
  const Matrix P = M({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(cohomology_dim(d_out * P.transpose(), P * d_in), 1u);
  const auto h = cohomology(d_out, d_in);
  ASSERT_EQ(h.representatives.size(), 1u);
  EXPECT_TRUE(is_zero(d_out * h.representatives[0]));
  EXPECT_FALSE(in_image(d_in, h.representatives[0]).has_value());
}

TEST(Linalg, CellCapIsAResourceError) {
  try {
    detail::check_cells(10000, 10000, 1000000, "test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
}
