#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dialg/error.hpp"
#include "dialg/matrix.hpp"
#include "dialg/report.hpp"

namespace dialg {

/// Finite-dimensional dialgebra given by the structure constants of the left
/// product (x -| y) and the right product (x |- y).
struct Dialgebra {
  Tensor3 left;
  Tensor3 right;

  Dialgebra() = default;
  Dialgebra(Tensor3 l, Tensor3 r) : left(std::move(l)), right(std::move(r)) {
    require(left.dim() == right.dim(), ErrorKind::ShapeMismatch, "left and right products differ in dimension");
  }

  std::size_t dim() const noexcept { return left.dim(); }

  Vector l(const Vector& x, const Vector& y) const { return left(x, y); }
  Vector r(const Vector& x, const Vector& y) const { return right(x, y); }

  friend bool operator==(const Dialgebra&, const Dialgebra&) = default;
};

namespace detail {

/// (e_a * e_b) # e_c where * = inner, # = outer.
inline Vector compose_first(const Tensor3& inner, const Tensor3& outer, std::size_t a, std::size_t b,
                            std::size_t c) {
  return outer(inner.product(a, b), unit_vector(inner.dim(), c));
}

/// e_a # (e_b * e_c).
inline Vector compose_second(const Tensor3& outer, const Tensor3& inner, std::size_t a, std::size_t b,
                             std::size_t c) {
  return outer(unit_vector(inner.dim(), a), inner.product(b, c));
}

struct AxiomSpec {
  const char* name;
  // lhs = (x o1 y) o2 z, rhs = x o3 (y o4 z) or (x o3 y) o4 z
  bool lhs_left1, lhs_left2, rhs_left1, rhs_left2;
  bool rhs_nested_first;
};

// (x-|y)-|z = x-|(y-|z), (x|-y)|-z = x|-(y|-z), (x-|y)-|z = x-|(y|-z),
// (x|-y)-|z = x|-(y-|z), (x-|y)|-z = (x|-y)|-z
inline constexpr std::array<AxiomSpec, 5> kAxioms{{
    {"left-associativity", true, true, true, true, false},
    {"right-associativity", false, false, false, false, false},
    {"(x-|y)-|z = x-|(y|-z)", true, true, true, false, false},
    {"(x|-y)-|z = x|-(y-|z)", false, true, false, true, false},
    {"(x-|y)|-z = (x|-y)|-z", true, false, false, false, true},
}};

inline std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  return "(e" + std::to_string(a) + ", e" + std::to_string(b) + ", e" + std::to_string(c) + ")";
}

}  // namespace detail

/// Evaluates the five dialgebra axioms on every basis triple. Each clause
/// reports the first failing triple.
inline CheckReport check_axioms(const Dialgebra& D) {
  CheckReport report;
  const std::size_t d = D.dim();
  for (const auto& ax : detail::kAxioms) {
    const Tensor3& l1 = ax.lhs_left1 ? D.left : D.right;
    const Tensor3& l2 = ax.lhs_left2 ? D.left : D.right;
    const Tensor3& r1 = ax.rhs_left1 ? D.left : D.right;
    const Tensor3& r2 = ax.rhs_left2 ? D.left : D.right;
    std::optional<std::array<std::size_t, 3>> witness;
    for (std::size_t a = 0; a < d && !witness; ++a) {
      for (std::size_t b = 0; b < d && !witness; ++b) {
        for (std::size_t c = 0; c < d && !witness; ++c) {
          const Vector lhs = detail::compose_first(l1, l2, a, b, c);
          const Vector rhs = ax.rhs_nested_first ? detail::compose_first(r1, r2, a, b, c)
                                                 : detail::compose_second(r1, r2, a, b, c);
          if (lhs != rhs) witness = {a, b, c};
        }
      }
    }
    if (witness) {
      const auto [a, b, c] = *witness;
      report.fail(ax.name, {long(a), long(b), long(c)}, "fails at " + detail::triple_text(a, b, c));
    } else {
      report.pass(ax.name);
    }
  }
  return report;
}

/// First basis triple where (xy)z != x(yz), if any.
inline std::optional<std::array<std::size_t, 3>> associativity_witness(const Tensor3& mult) {
  const std::size_t d = mult.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        if (detail::compose_first(mult, mult, a, b, c) != detail::compose_second(mult, mult, a, b, c)) {
          return std::array<std::size_t, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline void require_associative(const Tensor3& mult) {
  if (auto w = associativity_witness(mult)) {
    throw Error(ErrorKind::NotAssociative, "(xy)z != x(yz) at " + detail::triple_text((*w)[0], (*w)[1], (*w)[2]));
  }
}

inline void require_axioms(const Dialgebra& D) {
  const auto report = check_axioms(D);
  if (const auto* f = report.first_failure()) {
    throw Error(ErrorKind::AxiomFailure, f->clause + " " + f->detail);
  }
}

/// x -| y = x |- y = xy for an associative product.
inline Dialgebra from_associative(const Tensor3& mult) {
  require_associative(mult);
  return Dialgebra(mult, mult);
}

/// Matrix m applied to the coordinate vector of e_i.
inline Vector apply_to_basis(const Matrix& m, std::size_t i) { return m.column(i); }

/// x -| y = x d(y), x |- y = d(x) y for an associative product and a
/// derivation d with d o d = 0.
inline Dialgebra from_differential(const Tensor3& mult, const Matrix& diff) {
  const std::size_t d = mult.dim();
  require(diff.rows() == d && diff.cols() == d, ErrorKind::ShapeMismatch, "differential must be d x d");
  require_associative(mult);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const Vector lhs = diff * mult.product(a, b);
      const Vector rhs = mult(diff.column(a), unit_vector(d, b)) + mult(unit_vector(d, a), diff.column(b));
      if (lhs != rhs) {
        throw Error(ErrorKind::NotDerivation, "d(xy) != d(x)y + x d(y) at (e" + std::to_string(a) + ", e" +
                                                  std::to_string(b) + ")");
      }
    }
  }
  const Matrix square = diff * diff;
  if (!square.is_zero()) {
    for (std::size_t a = 0; a < d; ++a) {
      if (!is_zero(square.column(a))) {
        throw Error(ErrorKind::NotSquareZero, "d(d(e" + std::to_string(a) + ")) != 0");
      }
    }
  }
  Tensor3 left(d), right(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const Vector l = mult(unit_vector(d, a), diff.column(b));
      const Vector r = mult(diff.column(a), unit_vector(d, b));
      for (std::size_t k = 0; k < d; ++k) {
        left.at(a, b, k) = l[k];
        right.at(a, b, k) = r[k];
      }
    }
  }
  Dialgebra D(std::move(left), std::move(right));
  require_axioms(D);
  return D;
}

/// Bimodule M over an associative algebra A. left_action.at(a, m, m') is the
/// coefficient of m_{m'} in a_a . m_m; right_action is indexed (m, a, m').
/// Both are stored as rectangular tensors packed in row-major order.
struct Bimodule {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<Rational> left_action;   // algebra_dim x module_dim x module_dim
  std::vector<Rational> right_action;  // module_dim x algebra_dim x module_dim

  Rational& l(std::size_t a, std::size_t m, std::size_t k) {
    return left_action[(a * module_dim + m) * module_dim + k];
  }
  const Rational& l(std::size_t a, std::size_t m, std::size_t k) const {
    return left_action[(a * module_dim + m) * module_dim + k];
  }
  Rational& r(std::size_t m, std::size_t a, std::size_t k) {
    return right_action[(m * algebra_dim + a) * module_dim + k];
  }
  const Rational& r(std::size_t m, std::size_t a, std::size_t k) const {
    return right_action[(m * algebra_dim + a) * module_dim + k];
  }

  /// a . m for coordinate vectors.
  Vector act_left(const Vector& a, const Vector& m) const {
    Vector out(module_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i) {
      if (is_zero(a[i])) continue;
      for (std::size_t j = 0; j < module_dim; ++j) {
        if (is_zero(m[j])) continue;
        for (std::size_t k = 0; k < module_dim; ++k) out[k] += a[i] * m[j] * l(i, j, k);
      }
    }
    return out;
  }

  /// m . a for coordinate vectors.
  Vector act_right(const Vector& m, const Vector& a) const {
    Vector out(module_dim);
    for (std::size_t j = 0; j < module_dim; ++j) {
      if (is_zero(m[j])) continue;
      for (std::size_t i = 0; i < algebra_dim; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t k = 0; k < module_dim; ++k) out[k] += m[j] * a[i] * r(j, i, k);
      }
    }
    return out;
  }
};

/// x -| y = x f(y), x |- y = f(x) y on M, for a bimodule map f: M -> A.
inline Dialgebra from_bimodule_map(const Tensor3& algebra, const Bimodule& module, const Matrix& f) {
  const std::size_t da = algebra.dim();
  const std::size_t dm = module.module_dim;
  require(module.algebra_dim == da, ErrorKind::ShapeMismatch, "bimodule over an algebra of another dimension");
  require(module.left_action.size() == da * dm * dm && module.right_action.size() == dm * da * dm,
          ErrorKind::ShapeMismatch, "bimodule action tensors have the wrong size");
  require(f.rows() == da && f.cols() == dm, ErrorKind::ShapeMismatch, "bimodule map must be dim A x dim M");
  require_associative(algebra);
  auto ea = [da](std::size_t i) { return unit_vector(da, i); };
  auto em = [dm](std::size_t i) { return unit_vector(dm, i); };
  auto where = [](const char* what, std::size_t a, std::size_t b, std::size_t c) {
    return std::string(what) + " fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
           std::to_string(c) + ")";
  };
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < da; ++b) {
      for (std::size_t m = 0; m < dm; ++m) {
        if (module.act_left(algebra.product(a, b), em(m)) != module.act_left(ea(a), module.act_left(ea(b), em(m)))) {
          throw Error(ErrorKind::NotBimodule, where("(ab)m = a(bm)", a, b, m));
        }
        if (module.act_right(em(m), algebra.product(a, b)) !=
            module.act_right(module.act_right(em(m), ea(a)), ea(b))) {
          throw Error(ErrorKind::NotBimodule, where("m(ab) = (ma)b", m, a, b));
        }
        if (module.act_right(module.act_left(ea(a), em(m)), ea(b)) !=
            module.act_left(ea(a), module.act_right(em(m), ea(b)))) {
          throw Error(ErrorKind::NotBimodule, where("(am)b = a(mb)", a, m, b));
        }
      }
    }
  }
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t m = 0; m < dm; ++m) {
      if (f * module.act_left(ea(a), em(m)) != algebra(ea(a), f.column(m))) {
        throw Error(ErrorKind::NotBimoduleMap, "f(am) != a f(m) at (" + std::to_string(a) + ", " + std::to_string(m) + ")");
      }
      if (f * module.act_right(em(m), ea(a)) != algebra(f.column(m), ea(a))) {
        throw Error(ErrorKind::NotBimoduleMap, "f(ma) != f(m) a at (" + std::to_string(m) + ", " + std::to_string(a) + ")");
      }
    }
  }
  Tensor3 left(dm), right(dm);
  for (std::size_t x = 0; x < dm; ++x) {
    for (std::size_t y = 0; y < dm; ++y) {
      const Vector l = module.act_right(em(x), f.column(y));
      const Vector r = module.act_left(f.column(x), em(y));
      for (std::size_t k = 0; k < dm; ++k) {
        left.at(x, y, k) = l[k];
        right.at(x, y, k) = r[k];
      }
    }
  }
  Dialgebra D(std::move(left), std::move(right));
  require_axioms(D);
  return D;
}

/// f(x -| y) = f(x) -| f(y) and f(x |- y) = f(x) |- f(y) on basis pairs,
/// for f: source -> target given as a target.dim x source.dim matrix.
inline bool is_morphism(const Dialgebra& source, const Dialgebra& target, const Matrix& f) {
  const std::size_t ds = source.dim();
  if (f.rows() != target.dim() || f.cols() != ds) return false;
  for (std::size_t a = 0; a < ds; ++a) {
    for (std::size_t b = 0; b < ds; ++b) {
      if (f * source.left.product(a, b) != target.l(f.column(a), f.column(b))) return false;
      if (f * source.right.product(a, b) != target.r(f.column(a), f.column(b))) return false;
    }
  }
  return true;
}

}  // namespace dialg
