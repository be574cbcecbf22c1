#pragma once

// Singular extensions 0 -> D -i-> B -p-> D -> 0. Elements of B = D (+) D are
// written (x, y) with x the kernel coordinate; basis (e_k, 0) comes first,
// then (0, e_k).

#include <cstddef>
#include <optional>
#include <string>

#include "dialg/cohomology.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/error.hpp"
#include "dialg/linalg.hpp"
#include "dialg/oriented.hpp"
#include "dialg/report.hpp"

namespace dialg {

struct SingularExtension {
  OrientedDialgebra total;
  Matrix inclusion;   // 2d x d
  Matrix projection;  // d x 2d
};

/// (x1,y1) -| (x2,y2) = (x1 -| y2 + y1 -| x2 + beta^l(y1,y2), y1 -| y2), likewise
/// for |- with beta^r, and g(x,y) = (gx - alpha(g, gy), gy).
inline SingularExtension build_extension(const OrientedDialgebra& OD, const Degree1Pair& pair) {
  const auto check = is_degree1_cocycle(OD, pair);
  require(check.ok, ErrorKind::NotCocycle, "(alpha, beta) is not a degree-1 cocycle");
  const std::size_t d = OD.dim();
  SingularExtension E;
  Tensor3 left(2 * d), right(2 * d);
  for (const bool is_left : {true, false}) {
    const Tensor3& T = is_left ? OD.base.left : OD.base.right;
    const Tensor3& beta = is_left ? pair.beta_l : pair.beta_r;
    Tensor3& out = is_left ? left : right;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          out.at(i, d + j, k) = T.at(i, j, k);          // x1 -| y2
          out.at(d + i, j, k) = T.at(i, j, k);          // y1 -| x2
          out.at(d + i, d + j, k) = beta.at(i, j, k);   // beta(y1, y2)
          out.at(d + i, d + j, d + k) = T.at(i, j, k);  // y1 -| y2
        }
      }
    }
  }
  E.total.base = Dialgebra(std::move(left), std::move(right));
  E.total.group = OD.group;
  for (std::size_t g = 0; g < OD.group.order(); ++g) {
    const Matrix& r = OD.rho(g);
    Matrix B(2 * d, 2 * d);
    B.place(0, 0, r);
    B.place(0, d, pair.alpha[g] * r, -1);
    B.place(d, d, r);
    E.total.action.push_back(std::move(B));
  }
  E.inclusion = Matrix(2 * d, d);
  E.projection = Matrix(d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    E.inclusion(k, k) = 1;
    E.projection(k, d + k) = 1;
  }
  if (const auto* f = check_axioms(E.total.base).first_failure()) {
    throw Error(ErrorKind::AxiomFailure, "extension: " + f->clause + " " + f->detail);
  }
  if (const auto* f = check_oriented_dialgebra(E.total).first_failure()) {
    throw Error(ErrorKind::AxiomFailure, "extension: " + f->clause + " " + f->detail);
  }
  return E;
}

/// Every clause of the singular-extension definition. The kernel copy of D
/// carries the zero products, so "i is a morphism" reads i(x1) o i(x2) = 0.
inline CheckReport check_extension(const OrientedDialgebra& OD, const SingularExtension& E) {
  CheckReport report;
  const std::size_t d = OD.dim();
  const std::size_t n = E.total.dim();
  const auto& B = E.total.base;
  if (n != 2 * d || E.inclusion.rows() != n || E.inclusion.cols() != d || E.projection.rows() != d ||
      E.projection.cols() != n || E.total.group != OD.group) {
    report.fail("shapes", {}, "extension must be 2d-dimensional over the same group with i: d -> 2d, p: 2d -> d");
    return report;
  }
  report.append(check_axioms(B), "B: ");
  report.append(check_oriented_dialgebra(E.total), "B: ");

  auto clause = [&report](const std::string& name, bool ok, const std::string& detail) {
    if (ok) report.pass(name);
    else report.fail(name, {}, detail);
  };
  const Matrix pi = E.projection * E.inclusion;
  clause("p i = 0", pi.is_zero(), "p i is nonzero");
  clause("i injective", rank(E.inclusion) == d, "rank i < d");
  clause("p surjective", rank(E.projection) == d, "rank p < d");
  clause("exactness at B", pi.is_zero() && rank(E.inclusion) + rank(E.projection) == n, "ker p != im i");

  std::vector<long> w;
  for (std::size_t g = 0; g < OD.group.order() && w.empty(); ++g) {
    if (E.total.rho(g) * E.inclusion != E.inclusion * OD.rho(g)) w = {long(g)};
  }
  if (w.empty()) report.pass("i equivariant");
  else report.fail("i equivariant", w, "g i != i g");
  w.clear();
  for (std::size_t g = 0; g < OD.group.order() && w.empty(); ++g) {
    if (E.projection * E.total.rho(g) != OD.rho(g) * E.projection) w = {long(g)};
  }
  if (w.empty()) report.pass("p equivariant");
  else report.fail("p equivariant", w, "g p != p g");

  clause("p morphism", is_morphism(B, OD.base, E.projection), "p does not preserve the products");

  for (const bool left : {true, false}) {
    const Tensor3& TB = left ? B.left : B.right;
    const Tensor3& TD = left ? OD.base.left : OD.base.right;
    const std::string o = left ? "-|" : "|-";
    std::vector<long> sq, lw, rw;
    for (std::size_t a = 0; a < d; ++a) {
      const Vector ia = E.inclusion.column(a);
      for (std::size_t c = 0; c < d && sq.empty(); ++c) {
        if (!is_zero(TB(ia, E.inclusion.column(c)))) sq = {long(a), long(c)};
      }
      for (std::size_t b = 0; b < n; ++b) {
        const Vector eb = unit_vector(n, b);
        const Vector pb = E.projection * eb;
        if (lw.empty() && TB(ia, eb) != E.inclusion * TD(unit_vector(d, a), pb)) lw = {long(a), long(b)};
        if (rw.empty() && TB(eb, ia) != E.inclusion * TD(pb, unit_vector(d, a))) rw = {long(b), long(a)};
      }
    }
    const std::string s1 = "i(x1) " + o + " i(x2) = 0";
    const std::string s2 = "i(x) " + o + " b = i(x " + o + " p(b))";
    const std::string s3 = "b " + o + " i(x) = i(p(b) " + o + " x)";
    if (sq.empty()) report.pass(s1);
    else report.fail(s1, sq, "fails on kernel basis pair");
    if (lw.empty()) report.pass(s2);
    else report.fail(s2, lw, "fails at (kernel e" + std::to_string(lw[0]) + ", B e" + std::to_string(lw[1]) + ")");
    if (rw.empty()) report.pass(s3);
    else report.fail(s3, rw, "fails at (B e" + std::to_string(rw[0]) + ", kernel e" + std::to_string(rw[1]) + ")");
  }
  return report;
}

inline Matrix canonical_section(std::size_t d) {
  Matrix s(2 * d, d);
  for (std::size_t k = 0; k < d; ++k) s(d + k, k) = 1;
  return s;
}

/// alpha(g, x) = s(x) - g s(g^-1 x) and beta^l(x1, x2) = s(x1) -| s(x2) - s(x1 -| x2)
/// (beta^r with |-), both pulled back along i.
inline Degree1Pair extract_cocycle(const OrientedDialgebra& OD, const SingularExtension& E, const Matrix& s) {
  const std::size_t d = OD.dim();
  const std::size_t n = E.total.dim();
  require(s.rows() == n && s.cols() == d, ErrorKind::ShapeMismatch, "section must be 2d x d");
  require(E.projection * s == Matrix::identity(d), ErrorKind::NotSection, "p s != id");
  auto pull_back = [&E](const Vector& b) {
    auto x = in_image(E.inclusion, b);
    require(x.has_value(), ErrorKind::InvalidArgument, "defect is not in the image of i; the sequence is not exact");
    return *x;
  };
  auto pair = Degree1Pair::zero(d, OD.group.order());
  for (std::size_t g = 0; g < OD.group.order(); ++g) {
    const Matrix defect = s - E.total.rho(g) * s * OD.rho(OD.group.inverse(g));
    for (std::size_t i = 0; i < d; ++i) {
      const Vector x = pull_back(defect.column(i));
      for (std::size_t k = 0; k < d; ++k) pair.alpha[g](k, i) = x[k];
    }
  }
  for (const bool left : {true, false}) {
    const Tensor3& TB = left ? E.total.base.left : E.total.base.right;
    const Tensor3& TD = left ? OD.base.left : OD.base.right;
    Tensor3& beta = left ? pair.beta_l : pair.beta_r;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vector x = pull_back(TB(s.column(i), s.column(j)) - s * TD.product(i, j));
        for (std::size_t k = 0; k < d; ++k) beta.at(i, j, k) = x[k];
      }
    }
  }
  require(is_degree1_cocycle(OD, pair).ok, ErrorKind::NotCocycle, "extracted pair is not a cocycle");
  return pair;
}

/// Some gamma with D^0(gamma) = b - a, or nothing when the classes differ.
inline std::optional<Matrix> cocycles_cohomologous(const OrientedDialgebra& OD, const Degree1Pair& a,
                                                   const Degree1Pair& b, const EngineConfig& cfg = {}) {
  const Matrix D0 = total_differential(OD, 0, cfg);
  const auto u = in_image(D0, to_total_vector(OD, b) - to_total_vector(OD, a));
  if (!u) return std::nullopt;
  return gamma_from_vector(*u, OD.dim());
}

}  // namespace dialg
