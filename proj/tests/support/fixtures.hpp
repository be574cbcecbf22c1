#pragma once

#include <random>
#include <string>
#include <vector>

#include "dialg/dialg.hpp"

namespace fixtures {

using namespace dialg;

inline Tensor3 zero_tensor(std::size_t d) { return Tensor3(d); }

/// K with xy.
inline Tensor3 field_mult() {
  Tensor3 m(1);
  m.at(0, 0, 0) = 1;
  return m;
}

/// K[u]/(u^2), basis (1, u).
inline Tensor3 dual_numbers_mult() {
  Tensor3 m(2);
  m.at(0, 0, 0) = 1;
  m.at(0, 1, 1) = 1;
  m.at(1, 0, 1) = 1;
  return m;
}

/// K x K with idempotents e0, e1.
inline Tensor3 product_mult() {
  Tensor3 m(2);
  m.at(0, 0, 0) = 1;
  m.at(1, 1, 1) = 1;
  return m;
}

/// Upper triangular 2x2 matrices, basis (E11, E12, E22).
inline Tensor3 upper_triangular_mult() {
  Tensor3 m(3);
  m.at(0, 0, 0) = 1;  // E11 E11 = E11
  m.at(0, 1, 1) = 1;  // E11 E12 = E12
  m.at(1, 2, 1) = 1;  // E12 E22 = E12
  m.at(2, 2, 2) = 1;  // E22 E22 = E22
  return m;
}

/// e1 -| e1 = e2, e1 |- e1 = 2 e2, all other products zero.
inline Dialgebra nilpotent_pair() {
  Tensor3 l(2), r(2);
  l.at(0, 0, 1) = 1;
  r.at(0, 0, 1) = 2;
  return Dialgebra(l, r);
}

/// ad(E12) on upper triangular matrices: d(E11) = -E12, d(E22) = E12.
inline Matrix upper_triangular_derivation() {
  Matrix d(3, 3);
  d(1, 0) = -1;
  d(1, 2) = 1;
  return d;
}

/// x -| y = x f(y), x |- y = f(x) y on M = K^2 over A = K with f the first
/// coordinate.
inline Dialgebra functional_dialgebra() {
  Bimodule M;
  M.algebra_dim = 1;
  M.module_dim = 2;
  M.left_action.assign(4, 0);
  M.right_action.assign(4, 0);
  for (std::size_t i = 0; i < 2; ++i) {
    M.l(0, i, i) = 1;
    M.r(i, 0, i) = 1;
  }
  Matrix f(1, 2);
  f(0, 0) = 1;
  return from_bimodule_map(field_mult(), M, f);
}

struct Named {
  std::string name;
  OrientedDialgebra od;
};

/// K[u]/(u^2) with -1 acting by u -> -u and epsilon = id.
inline OrientedDialgebra dual_numbers_signed() {
  Matrix r = Matrix::identity(2);
  r(1, 1) = -1;
  return {from_associative(dual_numbers_mult()), OrientedGroup::plus_minus(), {Matrix::identity(2), r}};
}

/// K x K with the swap and trivial orientation.
inline OrientedDialgebra product_swap() {
  Matrix s(2, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  return {from_associative(product_mult()), OrientedGroup::cyclic(2), {Matrix::identity(2), s}};
}

/// Nilpotent pair with -1 acting by e1 -> -e1 and epsilon = id.
inline OrientedDialgebra nilpotent_signed() {
  Matrix r = Matrix::identity(2);
  r(0, 0) = -1;
  return {nilpotent_pair(), OrientedGroup::plus_minus(), {Matrix::identity(2), r}};
}

/// Upper triangular matrices with the transpose-like anti-involution
/// E11 <-> E22, E12 fixed, epsilon = id.
inline OrientedDialgebra upper_triangular_reversed() {
  Matrix r(3, 3);
  r(2, 0) = 1;
  r(1, 1) = 1;
  r(0, 2) = 1;
  return {from_associative(upper_triangular_mult()), OrientedGroup::plus_minus(), {Matrix::identity(3), r}};
}

/// Every plain dialgebra fixture, each with the trivial group.
inline std::vector<Named> trivial_group_fixtures() {
  return {
      {"zero d=1", OrientedDialgebra::with_trivial_group(Dialgebra(zero_tensor(1), zero_tensor(1)))},
      {"zero d=2", OrientedDialgebra::with_trivial_group(Dialgebra(zero_tensor(2), zero_tensor(2)))},
      {"field", OrientedDialgebra::with_trivial_group(from_associative(field_mult()))},
      {"dual numbers", OrientedDialgebra::with_trivial_group(from_associative(dual_numbers_mult()))},
      {"K x K", OrientedDialgebra::with_trivial_group(from_associative(product_mult()))},
      {"nilpotent pair", OrientedDialgebra::with_trivial_group(nilpotent_pair())},
      {"functional", OrientedDialgebra::with_trivial_group(functional_dialgebra())},
      {"upper triangular", OrientedDialgebra::with_trivial_group(from_associative(upper_triangular_mult()))},
      {"upper triangular, ad E12",
       OrientedDialgebra::with_trivial_group(from_differential(upper_triangular_mult(), upper_triangular_derivation()))},
  };
}

inline std::vector<Named> group_fixtures() {
  return {
      {"dual numbers, Z/2 eps=id", dual_numbers_signed()},
      {"K x K, swap", product_swap()},
      {"nilpotent pair, Z/2 eps=id", nilpotent_signed()},
  };
}

/// Small random rational in [-range, range] with denominators up to 3.
inline Rational random_rational(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  Rational x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
  }
  return m;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

/// Random combination of a spanning set.
inline Vector random_combination(std::mt19937& rng, const std::vector<Vector>& basis, std::size_t n) {
  Vector v(n);
  for (const auto& b : basis) v = v + random_rational(rng) * b;
  return v;
}

/// Random degree-1 cocycle: a random element of ker D^1.
inline Degree1Pair random_cocycle(std::mt19937& rng, const OrientedDialgebra& OD, const std::vector<Vector>& z1) {
  const TotalLayout T(1, OD.group.order(), OD.dim());
  return pair_from_total_vector(OD, random_combination(rng, z1, T.size));
}

inline DeformationEquivalence random_equivalence(std::mt19937& rng, std::size_t d, std::size_t order) {
  DeformationEquivalence eq{order, {Matrix::identity(d)}};
  for (std::size_t i = 1; i <= order; ++i) eq.psi.push_back(random_matrix(rng, d, d));
  return eq;
}

}  // namespace fixtures
