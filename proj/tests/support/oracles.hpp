#pragma once

// Reference computations written without the engine's tree recursion or
// matrix assembly.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "dialg/dialg.hpp"

namespace oracles {

using namespace dialg;

/// (2n)! / (n! (n+1)!)
inline Integer catalan_factorial(unsigned n) {
  Integer a, b, c;
  mpz_fac_ui(a.get_mpz_t(), 2 * n);
  mpz_fac_ui(b.get_mpz_t(), n);
  mpz_fac_ui(c.get_mpz_t(), n + 1);
  return a / (b * c);
}

/// Permutations of 1..n avoiding the pattern 231, in lexicographic order.
/// These are exactly the tree words.
inline std::vector<std::vector<int>> words_231_avoiding(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        for (int k = j + 1; k < n && ok; ++k) {
          if (p[k] < p[i] && p[i] < p[j]) ok = false;
        }
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

enum Side { L, R };

/// Y_2 in canonical order: [1 2] (all |-), [2 1] (all -|).
inline constexpr std::array<Side, 2> kY2{R, L};

struct Y3Row {
  std::array<int, 3> word;
  std::array<Side, 4> orient;  // o_0..o_3
  std::array<Side, 4> face;    // d_0..d_3 as [2 1] = L, [1 2] = R
};

/// Y_3 in canonical order, worked out by hand.
inline constexpr std::array<Y3Row, 5> kY3{{
    {{1, 2, 3}, {R, R, R, R}, {R, R, R, R}},
    {{1, 3, 2}, {R, R, L, L}, {L, L, R, R}},
    {{2, 1, 3}, {R, L, R, R}, {R, R, R, L}},
    {{3, 1, 2}, {L, L, R, L}, {R, L, L, L}},
    {{3, 2, 1}, {L, L, L, L}, {L, L, L, L}},
}};

inline const Tensor3& prod(const Dialgebra& D, Side s) { return s == L ? D.left : D.right; }

/// delta^1 from beta(y; x1, x2) = x1 o_0 gamma(x2) - gamma(x1 o_1 x2) + gamma(x1) o_2 x2,
/// with o = -| for [2 1] and |- for [1 2]. Columns follow gamma(e_i) coordinates.
inline Matrix delta1(const Dialgebra& D) {
  const std::size_t d = D.dim();
  Matrix M(2 * d * d * d, d * d);
  for (std::size_t c = 0; c < d * d; ++c) {
    Matrix gamma(d, d);
    gamma(c % d, c / d) = 1;
    for (std::size_t t = 0; t < 2; ++t) {
      const Tensor3& T = prod(D, kY2[t]);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const Vector v = T(unit_vector(d, i), gamma.column(j)) - gamma * T.product(i, j) +
                           T(gamma.column(i), unit_vector(d, j));
          for (std::size_t k = 0; k < d; ++k) M(((t * d + i) * d + j) * d + k, c) = v[k];
        }
      }
    }
  }
  return M;
}

/// delta^2 from
///   x1 o_0 b(d_0 y; x2, x3) - b(d_1 y; x1 o_1 x2, x3) + b(d_2 y; x1, x2 o_2 x3) - b(d_3 y; x1, x2) o_3 x3
/// evaluated with the hand table.
inline Matrix delta2(const Dialgebra& D) {
  const std::size_t d = D.dim();
  const std::size_t cols = 2 * d * d * d;
  Matrix M(5 * d * d * d * d, cols);
  auto e = [d](std::size_t i) { return unit_vector(d, i); };
  for (std::size_t c = 0; c < cols; ++c) {
    // b(side; x, y) for the basis 2-cochain with a single 1 at c
    const std::size_t bt = c / (d * d * d), bi = (c / (d * d)) % d, bj = (c / d) % d, bk = c % d;
    auto b = [&](Side s, const Vector& x, const Vector& y) {
      Vector out(d);
      if (kY2[bt] != s) return out;
      out[bk] = x[bi] * y[bj];
      return out;
    };
    for (std::size_t t = 0; t < 5; ++t) {
      const auto& row = kY3[t];
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t l = 0; l < d; ++l) {
            const Vector v = prod(D, row.orient[0])(e(i), b(row.face[0], e(j), e(l))) -
                             b(row.face[1], prod(D, row.orient[1]).product(i, j), e(l)) +
                             b(row.face[2], e(i), prod(D, row.orient[2]).product(j, l)) -
                             prod(D, row.orient[3])(b(row.face[3], e(i), e(j)), e(l));
            for (std::size_t k = 0; k < d; ++k) M((((t * d + i) * d + j) * d + l) * d + k, c) = v[k];
          }
        }
      }
    }
  }
  return M;
}

/// Columns are the cocycle residuals of the Tot^1 basis vectors, so the
/// kernel is the solution set of the degree-1 equations.
inline Matrix degree1_equation_matrix(const OrientedDialgebra& OD) {
  const TotalLayout T(1, OD.group.order(), OD.dim());
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < T.size; ++c) {
    columns.push_back(is_degree1_cocycle(OD, pair_from_total_vector(OD, unit_vector(T.size, c))).residual);
  }
  return Matrix::from_columns(columns.front().size(), columns);
}

/// span(a) is contained in span(b).
inline bool span_contains(const std::vector<Vector>& b, const std::vector<Vector>& a, std::size_t n) {
  if (a.empty()) return true;
  if (b.empty()) {
    for (const auto& v : a) {
      if (!is_zero(v)) return false;
    }
    return true;
  }
  const Matrix B = Matrix::from_columns(n, b);
  for (const auto& v : a) {
    if (!in_image(B, v)) return false;
  }
  return true;
}

}  // namespace oracles
