#include <gtest/gtest.h>

#include <random>

#include "dialg/deformations.hpp"
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

/// m_t = m + t beta, Phi_t(g) = rho(g) - t alpha_g rho(g).
TruncatedDeformation first_order(const OrientedDialgebra& OD, const Degree1Pair& pair) {
  auto def = constant_deformation(OD, 1);
  def.ml[1] = pair.beta_l;
  def.mr[1] = pair.beta_r;
  for (std::size_t g = 0; g < OD.group.order(); ++g) def.phi[1][g] = -1 * (pair.alpha[g] * OD.rho(g));
  return def;
}

}  // namespace

TEST(Deformations, ConstantDeformationPasses) {
  for (const auto& f : group_fixtures()) {
    const auto def = constant_deformation(f.od, 3);
    EXPECT_TRUE(check_deformation(f.od, def).ok()) << f.name;
    EXPECT_EQ(infinitesimal(f.od, def, 1), Degree1Pair::zero(f.od.dim(), f.od.group.order()));
  }
}

TEST(Deformations, FirstOrderDeformationsAreCocycles) {
  std::mt19937 rng(31);
  for (const auto& f : group_fixtures()) {
    const auto basis = nullspace(total_differential(f.od, 1));
    for (int i = 0; i < 3; ++i) {
      const auto pair = random_cocycle(rng, f.od, basis);
      const auto def = first_order(f.od, pair);
      EXPECT_TRUE(check_deformation(f.od, def).ok()) << f.name;
      EXPECT_EQ(infinitesimal(f.od, def), pair);
    }
    auto bad = Degree1Pair::zero(f.od.dim(), f.od.group.order());
    bad.beta_l.at(0, 0, 0) = 1;
    if (!is_degree1_cocycle(f.od, bad).ok) {
      EXPECT_FALSE(check_deformation(f.od, first_order(f.od, bad)).ok()) << f.name;
    }
  }
}

TEST(Deformations, TransportedConstantDeformations) {
  std::mt19937 rng(32);
  for (const auto& f : group_fixtures()) {
    for (int i = 0; i < 4; ++i) {
      const auto def1 = constant_deformation(f.od, 2);
      const auto eq = random_equivalence(rng, f.od.dim(), 2);
      const auto def2 = transport_deformation(def1, eq);
      EXPECT_TRUE(check_deformation(f.od, def2).ok()) << f.name;
      EXPECT_TRUE(check_equivalence(f.od, def1, def2, eq).ok()) << f.name;
      EXPECT_TRUE(is_degree1_cocycle(f.od, infinitesimal(f.od, def2)).ok) << f.name;
      EXPECT_EQ(infinitesimals_cohomologous(f.od, def1, def2, eq), eq.psi[1]) << f.name;
    }
  }
}

TEST(Deformations, TransportComposes) {
  std::mt19937 rng(33);
  const auto OD = dual_numbers_signed();
  const auto def = constant_deformation(OD, 2);
  const auto a = random_equivalence(rng, 2, 2);
  const auto b = random_equivalence(rng, 2, 2);
  // (a b)_n = sum a_i b_{n-i}
  DeformationEquivalence ab{2, {}};
  for (std::size_t n = 0; n <= 2; ++n) {
    Matrix m(2, 2);
    for (std::size_t i = 0; i <= n; ++i) m = m + a.psi[i] * b.psi[n - i];
    ab.psi.push_back(m);
  }
  const auto twice = transport_deformation(transport_deformation(def, a), b);
  const auto once = transport_deformation(def, ab);
  EXPECT_EQ(twice.ml, once.ml);
  EXPECT_EQ(twice.mr, once.mr);
  EXPECT_EQ(twice.phi, once.phi);
}

TEST(Deformations, Truncation) {
  std::mt19937 rng(34);
  const auto OD = product_swap();
  const auto def = transport_deformation(constant_deformation(OD, 3), random_equivalence(rng, 2, 3));
  const auto t = truncate(def, 1);
  EXPECT_EQ(t.order, 1u);
  EXPECT_TRUE(check_deformation(OD, t).ok());
  EXPECT_EQ(infinitesimal(OD, t), infinitesimal(OD, def));
  EXPECT_EQ(kind_of([&] { truncate(def, 4); }), ErrorKind::InvalidArgument);
}

TEST(Deformations, InfinitesimalNeedsVanishingLowerTerms) {
  std::mt19937 rng(35);
  const auto OD = dual_numbers_signed();
  const auto def = transport_deformation(constant_deformation(OD, 2), random_equivalence(rng, 2, 2));
  EXPECT_EQ(kind_of([&] { infinitesimal(OD, def, 2); }), ErrorKind::PrecedingTermsNonzero);
  EXPECT_EQ(kind_of([&] { infinitesimal(OD, def, 3); }), ErrorKind::InvalidArgument);
  auto shifted = constant_deformation(OD, 2);
  shifted.ml[2] = def.ml[1];
  shifted.mr[2] = def.mr[1];
  shifted.phi[2] = def.phi[1];
  EXPECT_EQ(infinitesimal(OD, shifted, 2), infinitesimal(OD, def, 1));
}

TEST(Deformations, BrokenEquivalenceIsReported) {
  std::mt19937 rng(36);
  const auto OD = dual_numbers_signed();
  const auto def1 = constant_deformation(OD, 2);
  auto eq = random_equivalence(rng, 2, 2);
  const auto def2 = transport_deformation(def1, eq);
  eq.psi[1](0, 0) += 1;
  EXPECT_FALSE(check_equivalence(OD, def1, def2, eq).ok());
  EXPECT_EQ(kind_of([&] { infinitesimals_cohomologous(OD, def1, def2, eq); }), ErrorKind::InvalidArgument);
}

TEST(Deformations, BaseTermsMustMatch) {
  const auto OD = dual_numbers_signed();
  auto def = constant_deformation(OD, 1);
  def.phi[0][1] = Matrix::identity(2);
  const auto rep = check_deformation(OD, def);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.first_failure()->clause, "base terms");
}

TEST(Deformations, RigidityProbe) {
  const auto K = OrientedDialgebra::with_trivial_group(from_associative(field_mult()));
  const auto r = rigidity_probe(K);
  EXPECT_TRUE(r.obstruction_space_trivial);
  EXPECT_TRUE(r.candidates.empty());
  const auto OD = dual_numbers_signed();
  const auto s = rigidity_probe(OD);
  EXPECT_FALSE(s.obstruction_space_trivial);
  ASSERT_EQ(s.candidates.size(), s.dim);
  for (const auto& c : s.candidates) {
    EXPECT_TRUE(is_degree1_cocycle(OD, c).ok);
    EXPECT_TRUE(check_deformation(OD, first_order(OD, c)).ok());
  }
}
