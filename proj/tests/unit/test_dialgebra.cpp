#include <gtest/gtest.h>

#include <random>

#include "dialg/dialgebra.hpp"
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

Dialgebra random_from_differential(std::mt19937& rng) {
  // d = c * ad(E12) on upper triangular matrices is a square-zero derivation
  return from_differential(upper_triangular_mult(), random_rational(rng) * upper_triangular_derivation());
}

}  // namespace

TEST(Dialgebra, ProductDialgebraPasses) {
  EXPECT_TRUE(check_axioms(from_associative(field_mult())).ok());
  EXPECT_TRUE(check_axioms(from_associative(dual_numbers_mult())).ok());
  EXPECT_EQ(check_axioms(from_associative(field_mult())).clauses.size(), 5u);
}

TEST(Dialgebra, ZeroRightProductBreaksMixedAxiom) {
  const auto r = check_axioms(Dialgebra(field_mult(), Tensor3(1)));
  EXPECT_FALSE(r.ok());
  const auto* f = r.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->clause, "(x-|y)-|z = x-|(y|-z)");
  EXPECT_EQ(f->witness, (std::vector<long>{0, 0, 0}));
}

TEST(Dialgebra, NonAssociativeInputIsRejected) {
  Tensor3 m(2);
  m.at(0, 0, 1) = 1;  // e0 e0 = e1
  m.at(1, 0, 0) = 1;  // e1 e0 = e0
  EXPECT_TRUE(associativity_witness(m).has_value());
  EXPECT_EQ(kind_of([&] { from_associative(m); }), ErrorKind::NotAssociative);
}

TEST(Dialgebra, FromDifferential) {
  const auto zero = from_differential(dual_numbers_mult(), Matrix(2, 2));
  EXPECT_TRUE(zero.left.is_zero());
  EXPECT_TRUE(zero.right.is_zero());
  // d(1) = 0, d(u) = 1 is not a derivation: d(u u) = 0 but d(u) u + u d(u) = 2u
  Matrix d(2, 2);
  d(0, 1) = 1;
  EXPECT_EQ(kind_of([&] { from_differential(dual_numbers_mult(), d); }), ErrorKind::NotDerivation);
  // d(u) = u is a derivation with d^2 != 0
  Matrix e(2, 2);
  e(1, 1) = 1;
  EXPECT_EQ(kind_of([&] { from_differential(dual_numbers_mult(), e); }), ErrorKind::NotSquareZero);
  const auto D = from_differential(upper_triangular_mult(), upper_triangular_derivation());
  EXPECT_TRUE(check_axioms(D).ok());
  EXPECT_NE(D.left, D.right);
}

TEST(Dialgebra, RandomDifferentialsGiveDialgebras) {
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(check_axioms(random_from_differential(rng)).ok());
}

TEST(Dialgebra, FromBimoduleMap) {
  Bimodule A;
  A.algebra_dim = 2;
  A.module_dim = 2;
  A.left_action.assign(8, 0);
  A.right_action.assign(8, 0);
  const Tensor3 m = dual_numbers_mult();
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t k = 0; k < 2; ++k) {
        A.l(a, x, k) = m.at(a, x, k);
        A.r(x, a, k) = m.at(x, a, k);
      }
    }
  }
  EXPECT_EQ(from_bimodule_map(m, A, Matrix::identity(2)), from_associative(m));
  const auto zero = from_bimodule_map(m, A, Matrix(2, 2));
  EXPECT_TRUE(zero.left.is_zero() && zero.right.is_zero());
  // multiplication by u is a bimodule map of the commutative algebra
  Matrix u(2, 2);
  u(1, 0) = 1;
  EXPECT_TRUE(check_axioms(from_bimodule_map(m, A, u)).ok());
  // a projection onto the first coordinate is not
  Matrix p(2, 2);
  p(0, 0) = 1;
  EXPECT_EQ(kind_of([&] { from_bimodule_map(m, A, p); }), ErrorKind::NotBimoduleMap);
  Bimodule broken = A;
  broken.l(1, 1, 0) = 1;
  EXPECT_EQ(kind_of([&] { from_bimodule_map(m, broken, u); }), ErrorKind::NotBimodule);
}

TEST(Dialgebra, FunctionalDialgebra) {
  const auto D = functional_dialgebra();
  EXPECT_TRUE(check_axioms(D).ok());
  EXPECT_EQ(D.left.at(1, 0, 1), 1);  // e1 -| e0 = e1 f(e0)
  EXPECT_EQ(D.left.at(0, 1, 0), 0);  // f(e1) = 0
  EXPECT_EQ(D.right.at(0, 1, 1), 1);
}

TEST(Dialgebra, BasisCheckAgreesWithRandomVectors) {
  std::mt19937 rng(5);
  for (const auto& D : {nilpotent_pair(), functional_dialgebra(), from_associative(upper_triangular_mult())}) {
    const std::size_t d = D.dim();
    for (int t = 0; t < 10; ++t) {
      const Vector x = random_vector(rng, d), y = random_vector(rng, d), z = random_vector(rng, d);
      EXPECT_EQ(D.l(D.l(x, y), z), D.l(x, D.l(y, z)));
      EXPECT_EQ(D.r(D.r(x, y), z), D.r(x, D.r(y, z)));
      EXPECT_EQ(D.l(D.l(x, y), z), D.l(x, D.r(y, z)));
      EXPECT_EQ(D.l(D.r(x, y), z), D.r(x, D.l(y, z)));
      EXPECT_EQ(D.r(D.l(x, y), z), D.r(D.r(x, y), z));
    }
  }
}

TEST(Dialgebra, Morphisms) {
  const auto D = from_associative(dual_numbers_mult());
  EXPECT_TRUE(is_morphism(D, D, Matrix::identity(2)));
  Matrix scale = Matrix::identity(2);
  scale(1, 1) = 3;  // u -> 3u
  EXPECT_TRUE(is_morphism(D, D, scale));
  Matrix bad = Matrix::identity(2);
  bad(0, 0) = 2;
  EXPECT_FALSE(is_morphism(D, D, bad));
}
