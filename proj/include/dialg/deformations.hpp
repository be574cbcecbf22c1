#pragma once

// Formal deformations truncated at t^N. A series sum_i a_i t^i is stored as
// the coefficient array a_0..a_N; every identity is checked per power of t.

#include <cstddef>
#include <string>
#include <vector>

#include "dialg/cohomology.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/error.hpp"
#include "dialg/oriented.hpp"
#include "dialg/report.hpp"

namespace dialg {

struct TruncatedDeformation {
  std::size_t order = 0;
  std::vector<Tensor3> ml;               // m^l_0..m^l_N
  std::vector<Tensor3> mr;               // m^r_0..m^r_N
  std::vector<std::vector<Matrix>> phi;  // phi[n][g]
};

struct DeformationEquivalence {
  std::size_t order = 0;
  std::vector<Matrix> psi;  // psi_0 = id
};

inline TruncatedDeformation constant_deformation(const OrientedDialgebra& OD, std::size_t order) {
  const std::size_t d = OD.dim();
  TruncatedDeformation def;
  def.order = order;
  def.ml.assign(order + 1, Tensor3(d));
  def.mr.assign(order + 1, Tensor3(d));
  def.phi.assign(order + 1, std::vector<Matrix>(OD.group.order(), Matrix(d, d)));
  def.ml[0] = OD.base.left;
  def.mr[0] = OD.base.right;
  def.phi[0] = OD.action;
  return def;
}

namespace detail {

inline void check_deformation_shape(const OrientedDialgebra& OD, const TruncatedDeformation& def) {
  const std::size_t d = OD.dim();
  bool ok = def.ml.size() == def.order + 1 && def.mr.size() == def.order + 1 && def.phi.size() == def.order + 1;
  for (std::size_t n = 0; ok && n <= def.order; ++n) {
    ok = def.ml[n].dim() == d && def.mr[n].dim() == d && def.phi[n].size() == OD.group.order();
    for (const auto& m : def.phi[n]) ok = ok && m.rows() == d && m.cols() == d;
  }
  require(ok, ErrorKind::ShapeMismatch, "deformation arrays do not match order, dimension or group");
}

/// Coefficients of Psi^-1: chi_0 = I, chi_n = -sum_{i>=1} psi_i chi_{n-i}.
inline std::vector<Matrix> series_inverse(const std::vector<Matrix>& psi) {
  const std::size_t d = psi.front().rows();
  std::vector<Matrix> chi{Matrix::identity(d)};
  for (std::size_t n = 1; n < psi.size(); ++n) {
    Matrix c(d, d);
    for (std::size_t i = 1; i <= n; ++i) c = c - psi[i] * chi[n - i];
    chi.push_back(std::move(c));
  }
  return chi;
}

/// Coefficient of t^n in m_t(a_t, b_t).
inline Vector series_product(const std::vector<Tensor3>& m, const std::vector<Vector>& a,
                             const std::vector<Vector>& b, std::size_t n) {
  Vector out(m.front().dim());
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) out = out + m[i](a[j], b[n - i - j]);
  }
  return out;
}

/// Coefficient series of Phi_t(g) applied to a fixed vector.
inline std::vector<Vector> apply_series(const std::vector<Matrix>& f, const Vector& x) {
  std::vector<Vector> out;
  for (const auto& m : f) out.push_back(m * x);
  return out;
}

inline std::vector<Matrix> phi_of(const TruncatedDeformation& def, std::size_t g) {
  std::vector<Matrix> out;
  for (const auto& level : def.phi) out.push_back(level[g]);
  return out;
}

inline std::vector<Vector> constant_series(const Vector& x, std::size_t order) {
  std::vector<Vector> out(order + 1, Vector(x.size()));
  out[0] = x;
  return out;
}

inline std::string at_power(std::size_t n) { return "t^" + std::to_string(n) + ": "; }

}  // namespace detail

/// The deformation read modulo t^(N+1).
inline TruncatedDeformation truncate(const TruncatedDeformation& def, std::size_t N) {
  require(N <= def.order, ErrorKind::InvalidArgument,
          "cannot truncate an order-" + std::to_string(def.order) + " deformation at order " + std::to_string(N));
  TruncatedDeformation out{N, {}, {}, {}};
  out.ml.assign(def.ml.begin(), def.ml.begin() + static_cast<std::ptrdiff_t>(N + 1));
  out.mr.assign(def.mr.begin(), def.mr.begin() + static_cast<std::ptrdiff_t>(N + 1));
  out.phi.assign(def.phi.begin(), def.phi.begin() + static_cast<std::ptrdiff_t>(N + 1));
  return out;
}

inline DeformationEquivalence truncate(const DeformationEquivalence& eq, std::size_t N) {
  require(N <= eq.order, ErrorKind::InvalidArgument,
          "cannot truncate an order-" + std::to_string(eq.order) + " equivalence at order " + std::to_string(N));
  return {N, std::vector<Matrix>(eq.psi.begin(), eq.psi.begin() + static_cast<std::ptrdiff_t>(N + 1))};
}

/// Transport of a deformation along Psi: m' = Psi^-1 m (Psi (x) Psi) and
/// Phi' = Psi^-1 Phi Psi, truncated at the common order.
inline TruncatedDeformation transport_deformation(const TruncatedDeformation& def, const DeformationEquivalence& eq) {
  require(def.order == eq.order && eq.psi.size() == eq.order + 1, ErrorKind::ShapeMismatch,
          "deformation and equivalence orders differ");
  const std::size_t N = def.order;
  const std::size_t d = def.ml.front().dim();
  require(eq.psi.front() == Matrix::identity(d), ErrorKind::InvalidArgument, "psi_0 must be the identity");
  const auto chi = detail::series_inverse(eq.psi);
  TruncatedDeformation out;
  out.order = N;
  for (const bool left : {true, false}) {
    const auto& m = left ? def.ml : def.mr;
    std::vector<Tensor3> res(N + 1, Tensor3(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto a = detail::apply_series(eq.psi, unit_vector(d, i));
        const auto b = detail::apply_series(eq.psi, unit_vector(d, j));
        std::vector<Vector> inner;
        for (std::size_t n = 0; n <= N; ++n) inner.push_back(detail::series_product(m, a, b, n));
        for (std::size_t n = 0; n <= N; ++n) {
          Vector v(d);
          for (std::size_t k = 0; k <= n; ++k) v = v + chi[k] * inner[n - k];
          for (std::size_t c = 0; c < d; ++c) res[n].at(i, j, c) = v[c];
        }
      }
    }
    (left ? out.ml : out.mr) = std::move(res);
  }
  const std::size_t m = def.phi.front().size();
  out.phi.assign(N + 1, std::vector<Matrix>(m, Matrix(d, d)));
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t n = 0; n <= N; ++n) {
      Matrix acc(d, d);
      for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; a + b <= n; ++b) acc = acc + chi[a] * def.phi[b][g] * eq.psi[n - a - b];
      }
      out.phi[n][g] = std::move(acc);
    }
  }
  return out;
}

/// Checks, per power t^n (n <= N): the base clause, the five dialgebra axioms
/// for (m^l_t, m^r_t), the composition law for Phi_t and the two twisted
/// compatibility laws.
inline CheckReport check_deformation(const OrientedDialgebra& OD, const TruncatedDeformation& def) {
  detail::check_deformation_shape(OD, def);
  CheckReport report;
  const std::size_t d = OD.dim();
  const std::size_t N = def.order;
  const auto& G = OD.group;
  {
    std::vector<long> w;
    for (std::size_t g = 0; g < G.order() && w.empty(); ++g) {
      if (def.phi[0][g] != OD.rho(g)) w = {long(g)};
    }
    if (def.ml[0] != OD.base.left || def.mr[0] != OD.base.right) report.fail("base terms", {}, "m_0 differs from the products");
    else if (!w.empty()) report.fail("base terms", w, "phi_0(g) != rho(g)");
    else report.pass("base terms");
  }
  auto e = [d](std::size_t i) { return unit_vector(d, i); };
  const auto& ml = def.ml;
  const auto& mr = def.mr;
  struct Axiom {
    const char* name;
    const std::vector<Tensor3>*o1, *o2, *o3, *o4;
    bool nested_first;
  };
  const Axiom axioms[] = {
      {"left-associativity", &ml, &ml, &ml, &ml, false},
      {"right-associativity", &mr, &mr, &mr, &mr, false},
      {"(x-|y)-|z = x-|(y|-z)", &ml, &ml, &ml, &mr, false},
      {"(x|-y)-|z = x|-(y-|z)", &mr, &ml, &mr, &ml, false},
      {"(x-|y)|-z = (x|-y)|-z", &ml, &mr, &mr, &mr, true},
  };
  for (std::size_t n = 0; n <= N; ++n) {
    const std::string at = detail::at_power(n);
    for (const auto& ax : axioms) {
      std::vector<long> w;
      for (std::size_t a = 0; a < d && w.empty(); ++a) {
        for (std::size_t b = 0; b < d && w.empty(); ++b) {
          for (std::size_t c = 0; c < d && w.empty(); ++c) {
            Vector lhs(d), rhs(d);
            for (std::size_t i = 0; i <= n; ++i) {
              lhs = lhs + (*ax.o2)[i]((*ax.o1)[n - i].product(a, b), e(c));
              rhs = rhs + (ax.nested_first ? (*ax.o4)[i]((*ax.o3)[n - i].product(a, b), e(c))
                                           : (*ax.o3)[i](e(a), (*ax.o4)[n - i].product(b, c)));
            }
            if (lhs != rhs) w = {long(n), long(a), long(b), long(c)};
          }
        }
      }
      if (w.empty()) report.pass(at + ax.name);
      else
        report.fail(at + ax.name, w,
                    "fails at (e" + std::to_string(w[1]) + ", e" + std::to_string(w[2]) + ", e" + std::to_string(w[3]) + ")");
    }
    {
      std::vector<long> w;
      for (std::size_t g = 0; g < G.order() && w.empty(); ++g) {
        for (std::size_t h = 0; h < G.order() && w.empty(); ++h) {
          Matrix rhs(d, d);
          for (std::size_t i = 0; i <= n; ++i) rhs = rhs + def.phi[i][g] * def.phi[n - i][h];
          if (def.phi[n][G.mul(g, h)] != rhs) w = {long(n), long(g), long(h)};
        }
      }
      const std::string name = at + "Phi(gh) = Phi(g) Phi(h)";
      if (w.empty()) report.pass(name);
      else report.fail(name, w, "fails at (g, h) = (" + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")");
    }
    for (const bool left : {true, false}) {
      const auto& m = left ? ml : mr;
      const std::string name = at + (left ? "Phi(g, m^l(y1,y2)) twisted" : "Phi(g, m^r(y1,y2)) twisted");
      std::vector<long> w;
      for (std::size_t g = 0; g < G.order() && w.empty(); ++g) {
        const auto phig = detail::phi_of(def, g);
        for (std::size_t a = 0; a < d && w.empty(); ++a) {
          for (std::size_t b = 0; b < d && w.empty(); ++b) {
            Vector lhs(d);
            for (std::size_t i = 0; i <= n; ++i) lhs = lhs + phig[i] * m[n - i].product(a, b);
            const auto pa = detail::apply_series(phig, e(a));
            const auto pb = detail::apply_series(phig, e(b));
            const Vector rhs = G.epsilon[g] == 1 ? detail::series_product(m, pa, pb, n) : detail::series_product(m, pb, pa, n);
            if (lhs != rhs) w = {long(n), long(g), long(a), long(b)};
          }
        }
      }
      if (w.empty()) report.pass(name);
      else
        report.fail(name, w,
                    "fails at g = " + std::to_string(w[1]) + " on (e" + std::to_string(w[2]) + ", e" + std::to_string(w[3]) + ")");
    }
  }
  return report;
}

/// (m_n, theta_n) with theta_n(g, x) = -phi_n(g, g^-1 x), packaged as a
/// degree-1 pair. Needs m_i = 0 and phi_i = 0 for 0 < i < n.
inline Degree1Pair infinitesimal(const OrientedDialgebra& OD, const TruncatedDeformation& def, std::size_t n = 1) {
  detail::check_deformation_shape(OD, def);
  require(n >= 1 && n <= def.order, ErrorKind::InvalidArgument,
          "infinitesimal order must lie in 1.." + std::to_string(def.order));
  for (std::size_t i = 1; i < n; ++i) {
    bool zero = def.ml[i].is_zero() && def.mr[i].is_zero();
    for (const auto& m : def.phi[i]) zero = zero && m.is_zero();
    if (!zero) throw Error(ErrorKind::PrecedingTermsNonzero, "term of order " + std::to_string(i) + " is nonzero");
  }
  Degree1Pair pair{{}, def.ml[n], def.mr[n]};
  for (std::size_t g = 0; g < OD.group.order(); ++g) {
    pair.alpha.push_back(-1 * (def.phi[n][g] * OD.rho(OD.group.inverse(g))));
  }
  return pair;
}

/// Per power t^n: psi(m2) = m1(psi, psi) for both products and
/// psi Phi2(g) = Phi1(g) psi.
inline CheckReport check_equivalence(const OrientedDialgebra& OD, const TruncatedDeformation& def1,
                                     const TruncatedDeformation& def2, const DeformationEquivalence& eq) {
  detail::check_deformation_shape(OD, def1);
  detail::check_deformation_shape(OD, def2);
  CheckReport report;
  const std::size_t d = OD.dim();
  if (def1.order != def2.order || eq.order != def1.order || eq.psi.size() != eq.order + 1) {
    report.fail("orders", {}, "deformations and equivalence must share the order");
    return report;
  }
  for (const auto& p : eq.psi) {
    if (p.rows() != d || p.cols() != d) {
      report.fail("orders", {}, "psi_i must be d x d");
      return report;
    }
  }
  if (eq.psi.front() == Matrix::identity(d)) report.pass("psi_0 = id");
  else report.fail("psi_0 = id", {0}, "psi_0 is not the identity");
  const std::size_t N = eq.order;
  for (std::size_t n = 0; n <= N; ++n) {
    const std::string at = detail::at_power(n);
    for (const bool left : {true, false}) {
      const auto& m1 = left ? def1.ml : def1.mr;
      const auto& m2 = left ? def2.ml : def2.mr;
      const std::string name = at + (left ? "Psi(m^l_2) = m^l_1(Psi, Psi)" : "Psi(m^r_2) = m^r_1(Psi, Psi)");
      std::vector<long> w;
      for (std::size_t a = 0; a < d && w.empty(); ++a) {
        for (std::size_t b = 0; b < d && w.empty(); ++b) {
          Vector lhs(d);
          for (std::size_t i = 0; i <= n; ++i) lhs = lhs + eq.psi[i] * m2[n - i].product(a, b);
          const auto pa = detail::apply_series(eq.psi, unit_vector(d, a));
          const auto pb = detail::apply_series(eq.psi, unit_vector(d, b));
          if (lhs != detail::series_product(m1, pa, pb, n)) w = {long(n), long(a), long(b)};
        }
      }
      if (w.empty()) report.pass(name);
      else report.fail(name, w, "fails at (e" + std::to_string(w[1]) + ", e" + std::to_string(w[2]) + ")");
    }
    std::vector<long> w;
    for (std::size_t g = 0; g < OD.group.order() && w.empty(); ++g) {
      Matrix lhs(d, d), rhs(d, d);
      for (std::size_t i = 0; i <= n; ++i) {
        lhs = lhs + eq.psi[i] * def2.phi[n - i][g];
        rhs = rhs + def1.phi[i][g] * eq.psi[n - i];
      }
      if (lhs != rhs) w = {long(n), long(g)};
    }
    const std::string name = at + "Psi Phi_2(g) = Phi_1(g) Psi";
    if (w.empty()) report.pass(name);
    else report.fail(name, w, "fails at g = " + std::to_string(w[1]));
  }
  return report;
}

/// psi_1 as the 0-cochain gamma with D^0(gamma) = inf(def2) - inf(def1),
/// verified exactly.
inline Matrix infinitesimals_cohomologous(const OrientedDialgebra& OD, const TruncatedDeformation& def1,
                                          const TruncatedDeformation& def2, const DeformationEquivalence& eq,
                                          const EngineConfig& cfg = {}) {
  require(eq.order >= 1, ErrorKind::InvalidArgument, "equivalence must have order >= 1");
  const auto report = check_equivalence(OD, def1, def2, eq);
  if (const auto* f = report.first_failure()) {
    throw Error(ErrorKind::InvalidArgument, "not an equivalence: " + f->clause + " " + f->detail);
  }
  const Matrix& gamma = eq.psi[1];
  const Vector diff = to_total_vector(OD, infinitesimal(OD, def2, 1)) - to_total_vector(OD, infinitesimal(OD, def1, 1));
  const Vector image = total_differential(OD, 0, cfg) * gamma_to_vector(gamma);
  require(diff == image, ErrorKind::CertificateFailure, "D(psi_1) differs from the difference of the infinitesimals");
  return gamma;
}

struct RigidityReport {
  std::size_t dim = 0;
  bool obstruction_space_trivial = true;
  std::vector<Degree1Pair> candidates;
};

/// Dimension of H~^1_G(D,D) and, when nonzero, cocycles representing a basis.
/// A zero dimension is necessary for rigidity; it is not a proof.
inline RigidityReport rigidity_probe(const OrientedDialgebra& OD, const EngineConfig& cfg = {}) {
  const auto h1 = equivariant_cohomology(OD, 1, cfg);
  RigidityReport r;
  r.dim = h1.dim;
  r.obstruction_space_trivial = h1.dim == 0;
  for (const auto& v : h1.representatives) r.candidates.push_back(pair_from_total_vector(OD, v));
  return r;
}

}  // namespace dialg
