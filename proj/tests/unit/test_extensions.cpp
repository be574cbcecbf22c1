#include <gtest/gtest.h>

#include <random>

#include "dialg/extensions.hpp"
#include "support/fixtures.hpp"

using namespace dialg;
using namespace fixtures;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

std::vector<Vector> z1(const OrientedDialgebra& OD) { return nullspace(total_differential(OD, 1)); }

}  // namespace

TEST(Extensions, ZeroCocycleGivesTheSplitExtension) {
  const auto OD = dual_numbers_signed();
  const auto zero = Degree1Pair::zero(2, 2);
  const auto E = build_extension(OD, zero);
  EXPECT_TRUE(check_extension(OD, E).ok());
  EXPECT_EQ(E.total.dim(), 4u);
  EXPECT_EQ(extract_cocycle(OD, E, canonical_section(2)), zero);
}

TEST(Extensions, RoundTripOnEveryFixture) {
  std::mt19937 rng(21);
  std::vector<Named> all = group_fixtures();
  for (auto& f : trivial_group_fixtures()) all.push_back(std::move(f));
  for (const auto& f : all) {
    const auto basis = z1(f.od);
    for (int i = 0; i < 3; ++i) {
      const auto pair = random_cocycle(rng, f.od, basis);
      const auto E = build_extension(f.od, pair);
      const auto rep = check_extension(f.od, E);
      EXPECT_TRUE(rep.ok()) << f.name << ": " << (rep.first_failure() ? rep.first_failure()->clause : "");
      EXPECT_EQ(extract_cocycle(f.od, E, canonical_section(f.od.dim())), pair) << f.name;
    }
  }
}

TEST(Extensions, OtherSectionsGiveCohomologousCocycles) {
  std::mt19937 rng(22);
  const auto OD = dual_numbers_signed();
  const auto basis = z1(OD);
  for (int i = 0; i < 5; ++i) {
    const auto pair = random_cocycle(rng, OD, basis);
    const auto E = build_extension(OD, pair);
    const Matrix s = canonical_section(2) + E.inclusion * random_matrix(rng, 2, 2);
    const auto other = extract_cocycle(OD, E, s);
    const auto gamma = cocycles_cohomologous(OD, pair, other);
    ASSERT_TRUE(gamma.has_value());
    EXPECT_EQ(to_total_vector(OD, pair) + total_differential(OD, 0) * gamma_to_vector(*gamma), to_total_vector(OD, other));
  }
}

TEST(Extensions, CoboundariesSplit) {
  std::mt19937 rng(23);
  const auto OD = product_swap();
  const auto pair = degree1_coboundary(OD, random_matrix(rng, 2, 2));
  const auto E = build_extension(OD, pair);
  const auto back = extract_cocycle(OD, E, canonical_section(2));
  EXPECT_TRUE(cocycles_cohomologous(OD, Degree1Pair::zero(2, 2), back).has_value());
}

TEST(Extensions, DistinctClassesAreNotCohomologous) {
  const auto OD = dual_numbers_signed();
  const auto h1 = equivariant_cohomology(OD, 1);
  ASSERT_EQ(h1.dim, 1u);
  const auto c = pair_from_total_vector(OD, h1.representatives[0]);
  EXPECT_FALSE(cocycles_cohomologous(OD, Degree1Pair::zero(2, 2), c).has_value());
}

TEST(Extensions, Errors) {
  const auto OD = dual_numbers_signed();
  auto bad = Degree1Pair::zero(2, 2);
  bad.beta_r.at(1, 1, 1) = 1;
  EXPECT_EQ(kind_of([&] { build_extension(OD, bad); }), ErrorKind::NotCocycle);
  const auto E = build_extension(OD, Degree1Pair::zero(2, 2));
  EXPECT_EQ(kind_of([&] { extract_cocycle(OD, E, Matrix(4, 2)); }), ErrorKind::NotSection);
  EXPECT_EQ(kind_of([&] { extract_cocycle(OD, E, Matrix(3, 2)); }), ErrorKind::ShapeMismatch);
}

TEST(Extensions, CheckerCatchesTampering) {
  const auto OD = dual_numbers_signed();
  auto E = build_extension(OD, Degree1Pair::zero(2, 2));
  E.total.base.left.at(0, 0, 0) = 5;  // i(e0) -| i(e0) != 0
  const auto rep = check_extension(OD, E);
  EXPECT_FALSE(rep.ok());
  bool square_zero_failed = false;
  for (const auto& c : rep.clauses) square_zero_failed = square_zero_failed || (c.clause == "i(x1) -| i(x2) = 0" && !c.passed);
  EXPECT_TRUE(square_zero_failed);

  auto F = build_extension(OD, Degree1Pair::zero(2, 2));
  F.projection(0, 0) = 1;
  EXPECT_FALSE(check_extension(OD, F).ok());
}
