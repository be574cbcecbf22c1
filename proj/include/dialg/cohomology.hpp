#pragma once

// Cochain complexes of a dialgebra with coefficients in itself.
//
// CY^n(D,D) = Hom(K[Y_n] (x) D^(x)n, D) is stored as a dense vector indexed
// by (tree, inputs, output): trees in canonical order, inputs (i_1..i_n) read
// as a base-d number with i_1 most significant, output basis index last.
// Bicochains in C^{p,q} put the group tuple (g_1..g_p), read as a base-|G|
// number, in front of that. Tot^n is the direct sum of C^{p,n+1-p} for
// p = 0..n in increasing p.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dialg/dialgebra.hpp"
#include "dialg/error.hpp"
#include "dialg/linalg.hpp"
#include "dialg/matrix.hpp"
#include "dialg/oriented.hpp"
#include "dialg/trees.hpp"

namespace dialg {

/// Exponent of the sign in the action of an orientation-reversing element on
/// n-cochains.
using SignExponent = long (*)(std::size_t);

/// (n-1)(n-2)/2
inline long sign_exponent_default(std::size_t n) {
  const long k = static_cast<long>(n);
  return (k - 1) * (k - 2) / 2;
}

/// n(n-1)/2
inline long sign_exponent_alternative(std::size_t n) {
  const long k = static_cast<long>(n);
  return k * (k - 1) / 2;
}

struct EngineConfig {
  std::size_t max_degree = 3;
  std::size_t max_tree_level = 6;
  std::size_t max_group_order = 24;
  std::size_t max_dim = 4;
  std::size_t max_cells = 8'000'000;
  SignExponent sigma = sign_exponent_default;
};

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

/// Base-b digits of x, most significant first.
inline std::vector<std::size_t> digits(std::size_t x, std::size_t base, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = count; i-- > 0;) {
    out[i] = x % base;
    x /= base;
  }
  return out;
}

inline std::size_t undigits(const std::vector<std::size_t>& ds, std::size_t base, std::size_t from = 0,
                            std::size_t to = std::size_t(-1)) {
  std::size_t x = 0;
  to = std::min(to, ds.size());
  for (std::size_t i = from; i < to; ++i) x = x * base + ds[i];
  return x;
}

inline void add_block(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& block, const Rational& scale) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) {
      const auto& x = block(r, c);
      if (!is_zero(x)) m(r0 + r, c0 + c) += scale * x;
    }
  }
}

inline void add_identity(Matrix& m, std::size_t r0, std::size_t c0, std::size_t n, const Rational& scale) {
  for (std::size_t i = 0; i < n; ++i) m(r0 + i, c0 + i) += scale;
}

inline const Tensor3& product(const Dialgebra& D, LeafOrientation o) {
  return o == LeafOrientation::Left ? D.left : D.right;
}

}  // namespace detail

struct CochainLayout {
  std::size_t level = 0;
  std::size_t dim = 0;
  std::size_t trees = 1;
  std::size_t inputs = 1;

  CochainLayout(std::size_t n, std::size_t d) : level(n), dim(d), trees(catalan(n)), inputs(detail::ipow(d, n)) {}

  std::size_t size() const noexcept { return trees * inputs * dim; }
  std::size_t index(std::size_t tree, std::size_t input, std::size_t k) const {
    return (tree * inputs + input) * dim + k;
  }
};

struct BicochainLayout {
  std::size_t p;
  std::size_t q;
  std::size_t tuples;
  CochainLayout inner;

  BicochainLayout(std::size_t p_, std::size_t q_, std::size_t group_order, std::size_t d)
      : p(p_), q(q_), tuples(detail::ipow(group_order, p_)), inner(q_, d) {}

  std::size_t size() const noexcept { return tuples * inner.size(); }
  std::size_t index(std::size_t tuple, std::size_t tree, std::size_t input, std::size_t k) const {
    return tuple * inner.size() + inner.index(tree, input, k);
  }
};

struct TotalLayout {
  std::size_t degree;
  std::vector<BicochainLayout> blocks;
  std::vector<std::size_t> offsets;
  std::size_t size = 0;

  TotalLayout(std::size_t n, std::size_t group_order, std::size_t d) : degree(n) {
    for (std::size_t p = 0; p <= n; ++p) {
      blocks.emplace_back(p, n + 1 - p, group_order, d);
      offsets.push_back(size);
      size += blocks.back().size();
    }
  }

  /// Position of block (p, n+1-p).
  std::size_t offset(std::size_t p) const { return offsets[p]; }
};

struct Cochain {
  std::size_t level = 0;
  Vector coeffs;
};

struct BicochainElement {
  std::size_t p = 0;
  std::size_t q = 1;
  Vector coeffs;
};

struct TotalDegreeElement {
  std::size_t degree = 0;
  std::vector<BicochainElement> components;
};

inline TotalDegreeElement split_total(const TotalLayout& layout, const Vector& v) {
  require(v.size() == layout.size, ErrorKind::ShapeMismatch, "vector does not match the total degree");
  TotalDegreeElement out{layout.degree, {}};
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
    const auto& blk = layout.blocks[b];
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(layout.offsets[b]);
    out.components.push_back({blk.p, blk.q, Vector(first, first + static_cast<std::ptrdiff_t>(blk.size()))});
  }
  return out;
}

inline void check_resources(const OrientedDialgebra& OD, const EngineConfig& cfg) {
  if (OD.dim() > cfg.max_dim) {
    throw Error(ErrorKind::Resource, "dimension " + std::to_string(OD.dim()) + " exceeds " + std::to_string(cfg.max_dim));
  }
  if (OD.group.order() > cfg.max_group_order) {
    throw Error(ErrorKind::Resource,
                "group order " + std::to_string(OD.group.order()) + " exceeds " + std::to_string(cfg.max_group_order));
  }
}

/// Matrix of delta^n : CY^n(D,D) -> CY^{n+1}(D,D).
inline Matrix delta_matrix(const Dialgebra& D, std::size_t n, const EngineConfig& cfg = {}) {
  if (n + 1 > cfg.max_tree_level) {
    throw Error(ErrorKind::Resource, "delta^" + std::to_string(n) + " needs trees of level " + std::to_string(n + 1) +
                                         " (limit " + std::to_string(cfg.max_tree_level) + ")");
  }
  const std::size_t d = D.dim();
  const CochainLayout src(n, d), dst(n + 1, d);
  detail::check_cells(dst.size(), src.size(), cfg.max_cells, "delta");
  const TreeLevel Y(n + 1);
  Matrix M(dst.size(), src.size());
  for (std::size_t t = 0; t < Y.count(); ++t) {
    for (std::size_t I = 0; I < dst.inputs; ++I) {
      const auto a = detail::digits(I, d, n + 1);
      // x_1 o_0 f(d_0 y; x_2..x_{n+1})
      {
        const Tensor3& T = detail::product(D, Y.orientation(t, 0));
        const std::size_t rest = detail::undigits(a, d, 1);
        const std::size_t f = Y.face_index(t, 0);
        for (std::size_t kp = 0; kp < d; ++kp) {
          for (std::size_t k = 0; k < d; ++k) {
            const auto& c = T.at(a[0], kp, k);
            if (!is_zero(c)) M(dst.index(t, I, k), src.index(f, rest, kp)) += c;
          }
        }
      }
      // (-1)^i f(d_i y; .., x_i o_i x_{i+1}, ..)
      for (std::size_t i = 1; i <= n; ++i) {
        const Tensor3& T = detail::product(D, Y.orientation(t, i));
        const Rational sign = i % 2 ? -1 : 1;
        const std::size_t f = Y.face_index(t, i);
        auto merged = a;
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t j = 0; j < d; ++j) {
          const auto& c = T.at(a[i - 1], a[i], j);
          if (is_zero(c)) continue;
          merged[i - 1] = j;
          const std::size_t J = detail::undigits(merged, d);
          for (std::size_t k = 0; k < d; ++k) M(dst.index(t, I, k), src.index(f, J, k)) += sign * c;
        }
      }
      // (-1)^{n+1} f(d_{n+1} y; x_1..x_n) o_{n+1} x_{n+1}
      {
        const Tensor3& T = detail::product(D, Y.orientation(t, n + 1));
        const Rational sign = (n + 1) % 2 ? -1 : 1;
        const std::size_t rest = detail::undigits(a, d, 0, n);
        const std::size_t f = Y.face_index(t, n + 1);
        for (std::size_t kp = 0; kp < d; ++kp) {
          for (std::size_t k = 0; k < d; ++k) {
            const auto& c = T.at(kp, a[n], k);
            if (!is_zero(c)) M(dst.index(t, I, k), src.index(f, rest, kp)) += sign * c;
          }
        }
      }
    }
  }
  return M;
}

/// HY^n(D,D); delta^{-1} is the zero map from the zero space.
inline CohomologyResult dialgebra_cohomology(const Dialgebra& D, std::size_t n, const EngineConfig& cfg = {}) {
  const Matrix d_out = delta_matrix(D, n, cfg);
  const Matrix d_in = n == 0 ? Matrix(d_out.cols(), 0) : delta_matrix(D, n - 1, cfg);
  return cohomology(d_out, d_in);
}

/// Matrix of f -> gf on CY^n(D,D):
///   (gf)(y; x_1..x_n) = g f(y; g^-1 x_1, .., g^-1 x_n)                   if epsilon(g) = +1
///   (gf)(y; x_1..x_n) = (-1)^sigma(n) g f(y; g^-1 x_n, .., g^-1 x_1)     if epsilon(g) = -1
inline Matrix action_matrix(const OrientedDialgebra& OD, std::size_t g, std::size_t n, const EngineConfig& cfg = {}) {
  const std::size_t d = OD.dim();
  const CochainLayout L(n, d);
  detail::check_cells(L.size(), L.size(), cfg.max_cells, "cochain action");
  const Matrix& rg = OD.rho(g);
  const Matrix& ri = OD.rho(OD.group.inverse(g));
  const bool reversing = OD.group.epsilon[g] == -1;
  const Rational sign = reversing && cfg.sigma(n) % 2 != 0 ? -1 : 1;
  Matrix A(L.size(), L.size());
  for (std::size_t I = 0; I < L.inputs; ++I) {
    const auto a = detail::digits(I, d, n);
    for (std::size_t J = 0; J < L.inputs; ++J) {
      const auto b = detail::digits(J, d, n);
      Rational coef = sign;
      for (std::size_t l = 0; l < n && !is_zero(coef); ++l) coef *= ri(b[l], a[reversing ? n - 1 - l : l]);
      if (is_zero(coef)) continue;
      for (std::size_t t = 0; t < L.trees; ++t) {
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t kp = 0; kp < d; ++kp) {
            const auto& r = rg(k, kp);
            if (!is_zero(r)) A(L.index(t, I, k), L.index(t, J, kp)) += coef * r;
          }
        }
      }
    }
  }
  return A;
}

inline Cochain act_on_cochain(const OrientedDialgebra& OD, std::size_t g, const Cochain& f, const EngineConfig& cfg = {}) {
  require(f.coeffs.size() == CochainLayout(f.level, OD.dim()).size(), ErrorKind::ShapeMismatch,
          "cochain length does not match its level");
  return {f.level, action_matrix(OD, g, f.level, cfg) * f.coeffs};
}

/// d' : C^{p,q} -> C^{p,q+1}, delta^q in every group argument.
inline Matrix horizontal_differential(const OrientedDialgebra& OD, std::size_t p, std::size_t q,
                                      const EngineConfig& cfg = {}) {
  require(q >= 1, ErrorKind::InvalidArgument, "the reduced bicomplex starts at q = 1");
  check_resources(OD, cfg);
  const BicochainLayout src(p, q, OD.group.order(), OD.dim()), dst(p, q + 1, OD.group.order(), OD.dim());
  detail::check_cells(dst.size(), src.size(), cfg.max_cells, "horizontal differential");
  const Matrix delta = delta_matrix(OD.base, q, cfg);
  Matrix M(dst.size(), src.size());
  for (std::size_t s = 0; s < src.tuples; ++s) M.place(s * dst.inner.size(), s * src.inner.size(), delta);
  return M;
}

/// d'' : C^{p,q} -> C^{p+1,q},
///   (d''f)(g_1..g_{p+1}) = g_1 f(g_2..g_{p+1}) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{p+1} f(g_1..g_p)
/// with g_1 acting on cochains as in action_matrix.
inline Matrix vertical_differential(const OrientedDialgebra& OD, std::size_t p, std::size_t q,
                                    const EngineConfig& cfg = {}) {
  require(q >= 1, ErrorKind::InvalidArgument, "the reduced bicomplex starts at q = 1");
  check_resources(OD, cfg);
  const std::size_t m = OD.group.order();
  const BicochainLayout src(p, q, m, OD.dim()), dst(p + 1, q, m, OD.dim());
  detail::check_cells(dst.size(), src.size(), cfg.max_cells, "vertical differential");
  const std::size_t L = src.inner.size();
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < m; ++g) acts.push_back(action_matrix(OD, g, q, cfg));
  Matrix M(dst.size(), src.size());
  for (std::size_t T = 0; T < dst.tuples; ++T) {
    const auto g = detail::digits(T, m, p + 1);
    detail::add_block(M, T * L, detail::undigits(g, m, 1) * L, acts[g[0]], 1);
    for (std::size_t i = 1; i <= p; ++i) {
      auto merged = g;
      merged[i - 1] = OD.group.mul(g[i - 1], g[i]);
      merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
      detail::add_identity(M, T * L, detail::undigits(merged, m) * L, L, i % 2 ? -1 : 1);
    }
    detail::add_identity(M, T * L, detail::undigits(g, m, 0, p) * L, L, (p + 1) % 2 ? -1 : 1);
  }
  return M;
}

/// D^n : Tot^n -> Tot^{n+1}, equal to d' + (-1)^q d'' on the block (p,q).
inline Matrix total_differential(const OrientedDialgebra& OD, std::size_t n, const EngineConfig& cfg = {}) {
  if (n > cfg.max_degree) {
    throw Error(ErrorKind::Resource,
                "total degree " + std::to_string(n) + " exceeds " + std::to_string(cfg.max_degree));
  }
  check_resources(OD, cfg);
  const std::size_t m = OD.group.order();
  const TotalLayout src(n, m, OD.dim()), dst(n + 1, m, OD.dim());
  detail::check_cells(dst.size, src.size, cfg.max_cells, "total differential");
  Matrix M(dst.size, src.size);
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n + 1 - p;
    detail::add_block(M, dst.offset(p), src.offset(p), horizontal_differential(OD, p, q, cfg), 1);
    detail::add_block(M, dst.offset(p + 1), src.offset(p), vertical_differential(OD, p, q, cfg), q % 2 ? -1 : 1);
  }
  return M;
}

/// H~^n_G(D,D). Throws NonComplex when D^n D^{n-1} != 0.
inline CohomologyResult equivariant_cohomology(const OrientedDialgebra& OD, std::size_t n,
                                               const EngineConfig& cfg = {}) {
  const Matrix d_out = total_differential(OD, n, cfg);
  const Matrix d_in = n == 0 ? Matrix(d_out.cols(), 0) : total_differential(OD, n - 1, cfg);
  return cohomology(d_out, d_in);
}

/// A degree-1 element of the total complex: alpha in C^{1,1} as one d x d
/// matrix per group element and beta in C^{0,2} split into beta^l (tree
/// [2 1]) and beta^r (tree [1 2]).
struct Degree1Pair {
  std::vector<Matrix> alpha;
  Tensor3 beta_l;
  Tensor3 beta_r;

  static Degree1Pair zero(std::size_t d, std::size_t group_order) {
    return {std::vector<Matrix>(group_order, Matrix(d, d)), Tensor3(d), Tensor3(d)};
  }

  friend bool operator==(const Degree1Pair&, const Degree1Pair&) = default;
};

namespace detail {

inline std::size_t tree_index_l() { return TreeLevel(2).index_of(Tree::from_word({2, 1})); }
inline std::size_t tree_index_r() { return TreeLevel(2).index_of(Tree::from_word({1, 2})); }

inline void check_pair_shape(const OrientedDialgebra& OD, const Degree1Pair& pair) {
  const std::size_t d = OD.dim();
  bool ok = pair.alpha.size() == OD.group.order() && pair.beta_l.dim() == d && pair.beta_r.dim() == d;
  for (const auto& a : pair.alpha) ok = ok && a.rows() == d && a.cols() == d;
  require(ok, ErrorKind::ShapeMismatch, "cocycle shapes do not match the oriented dialgebra");
}

}  // namespace detail

inline Vector to_total_vector(const OrientedDialgebra& OD, const Degree1Pair& pair) {
  detail::check_pair_shape(OD, pair);
  const std::size_t d = OD.dim();
  const TotalLayout T(1, OD.group.order(), d);
  const auto& b02 = T.blocks[0];
  const auto& b11 = T.blocks[1];
  const std::size_t tl = detail::tree_index_l(), tr = detail::tree_index_r();
  Vector v(T.size);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        v[T.offset(0) + b02.index(0, tl, i * d + j, k)] = pair.beta_l.at(i, j, k);
        v[T.offset(0) + b02.index(0, tr, i * d + j, k)] = pair.beta_r.at(i, j, k);
      }
    }
  }
  for (std::size_t g = 0; g < OD.group.order(); ++g) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) v[T.offset(1) + b11.index(g, 0, i, k)] = pair.alpha[g](k, i);
    }
  }
  return v;
}

inline Degree1Pair pair_from_total_vector(const OrientedDialgebra& OD, const Vector& v) {
  const std::size_t d = OD.dim();
  const TotalLayout T(1, OD.group.order(), d);
  require(v.size() == T.size, ErrorKind::ShapeMismatch, "vector is not in total degree 1");
  const auto& b02 = T.blocks[0];
  const auto& b11 = T.blocks[1];
  const std::size_t tl = detail::tree_index_l(), tr = detail::tree_index_r();
  auto pair = Degree1Pair::zero(d, OD.group.order());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        pair.beta_l.at(i, j, k) = v[T.offset(0) + b02.index(0, tl, i * d + j, k)];
        pair.beta_r.at(i, j, k) = v[T.offset(0) + b02.index(0, tr, i * d + j, k)];
      }
    }
  }
  for (std::size_t g = 0; g < OD.group.order(); ++g) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) pair.alpha[g](k, i) = v[T.offset(1) + b11.index(g, 0, i, k)];
    }
  }
  return pair;
}

/// A 1-cochain gamma (a d x d matrix) as a vector of Tot^0 = C^{0,1}.
inline Vector gamma_to_vector(const Matrix& gamma) {
  const std::size_t d = gamma.rows();
  Vector v(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) v[i * d + k] = gamma(k, i);
  }
  return v;
}

inline Matrix gamma_from_vector(const Vector& v, std::size_t d) {
  require(v.size() == d * d, ErrorKind::ShapeMismatch, "vector is not in total degree 0");
  Matrix gamma(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) gamma(k, i) = v[i * d + k];
  }
  return gamma;
}

/// Coboundary of gamma, written out directly:
///   beta^l(x1,x2) = x1 -| gamma(x2) - gamma(x1 -| x2) + gamma(x1) -| x2   (likewise beta^r)
///   alpha(g, x)   = gamma(x) - g gamma(g^-1 x)
inline Degree1Pair degree1_coboundary(const OrientedDialgebra& OD, const Matrix& gamma) {
  const std::size_t d = OD.dim();
  require(gamma.rows() == d && gamma.cols() == d, ErrorKind::ShapeMismatch, "gamma must be d x d");
  auto pair = Degree1Pair::zero(d, OD.group.order());
  for (const bool left : {true, false}) {
    const Tensor3& T = left ? OD.base.left : OD.base.right;
    Tensor3& beta = left ? pair.beta_l : pair.beta_r;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vector v = T(unit_vector(d, i), gamma.column(j)) - gamma * T.product(i, j) +
                         T(gamma.column(i), unit_vector(d, j));
        for (std::size_t k = 0; k < d; ++k) beta.at(i, j, k) = v[k];
      }
    }
  }
  for (std::size_t g = 0; g < OD.group.order(); ++g) {
    pair.alpha[g] = gamma - OD.rho(g) * gamma * OD.rho(OD.group.inverse(g));
  }
  return pair;
}

struct CocycleCheck {
  bool ok = true;
  /// Residuals of the group law for alpha, then the two alpha/beta laws per
  /// group element, then the five linearized dialgebra identities for beta.
  Vector residual;
};

/// Evaluates the degree-1 cocycle conditions term by term:
///   alpha(gh, x) = g alpha(h, g^-1 x) + alpha(g, x)
///   x1 o alpha(g,x2) - alpha(g, x1 o x2) + alpha(g,x1) o x2 = beta_o(x1,x2) - g beta_o(g^-1 x1, g^-1 x2)
///     (arguments of the last beta swapped when epsilon(g) = -1), o in {-|, |-}
///   beta is a first-order deformation of both products.
inline CocycleCheck is_degree1_cocycle(const OrientedDialgebra& OD, const Degree1Pair& pair) {
  detail::check_pair_shape(OD, pair);
  const std::size_t d = OD.dim();
  const auto& G = OD.group;
  const auto& L = OD.base.left;
  const auto& R = OD.base.right;
  CocycleCheck out;
  auto push = [&out](const Vector& v) {
    for (const auto& x : v) {
      if (!is_zero(x)) out.ok = false;
      out.residual.push_back(x);
    }
  };
  auto e = [d](std::size_t i) { return unit_vector(d, i); };
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Matrix& ginv = OD.rho(G.inverse(g));
    for (std::size_t h = 0; h < G.order(); ++h) {
      for (std::size_t i = 0; i < d; ++i) {
        push(pair.alpha[G.mul(g, h)] * e(i) - OD.rho(g) * (pair.alpha[h] * (ginv * e(i))) - pair.alpha[g] * e(i));
      }
    }
  }
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Matrix& a = pair.alpha[g];
    const Matrix& r = OD.rho(g);
    const Matrix& ginv = OD.rho(G.inverse(g));
    for (const bool left : {true, false}) {
      const Tensor3& T = left ? L : R;
      const Tensor3& beta = left ? pair.beta_l : pair.beta_r;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const Vector lhs = T(e(i), a.column(j)) - a * T.product(i, j) + T(a.column(i), e(j));
          const Vector twisted = G.epsilon[g] == 1 ? beta(ginv.column(i), ginv.column(j))
                                                   : beta(ginv.column(j), ginv.column(i));
          push(lhs - (beta.product(i, j) - r * twisted));
        }
      }
    }
  }
  // (m + t beta) satisfies the five axioms to first order in t.
  const auto& bl = pair.beta_l;
  const auto& br = pair.beta_r;
  struct Linearized {
    const Tensor3 *o1, *o2, *b1, *b2;  // (x o1 y) o2 z with perturbations b1, b2
    const Tensor3 *o3, *o4, *b3, *b4;  // x o3 (y o4 z) or (x o3 y) o4 z
    bool nested_first;
  };
  const Linearized laws[] = {
      {&L, &L, &bl, &bl, &L, &L, &bl, &bl, false},
      {&R, &R, &br, &br, &R, &R, &br, &br, false},
      {&L, &L, &bl, &bl, &L, &R, &bl, &br, false},
      {&R, &L, &br, &bl, &R, &L, &br, &bl, false},
      {&L, &R, &bl, &br, &R, &R, &br, &br, true},
  };
  for (const auto& law : laws) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          const Vector lhs = (*law.b2)(law.o1->product(i, j), e(k)) + (*law.o2)(law.b1->product(i, j), e(k));
          const Vector rhs = law.nested_first
                                 ? (*law.b4)(law.o3->product(i, j), e(k)) + (*law.o4)(law.b3->product(i, j), e(k))
                                 : (*law.b3)(e(i), law.o4->product(j, k)) + (*law.o3)(e(i), law.b4->product(j, k));
          push(lhs - rhs);
        }
      }
    }
  }
  return out;
}

}  // namespace dialg
