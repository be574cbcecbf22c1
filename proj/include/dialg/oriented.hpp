#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "dialg/dialgebra.hpp"
#include "dialg/error.hpp"
#include "dialg/matrix.hpp"
#include "dialg/report.hpp"

namespace dialg {

/// Finite group by multiplication table with an orientation character.
/// Element 0 is the identity.
struct OrientedGroup {
  std::vector<std::vector<std::size_t>> table;
  std::vector<int> epsilon;

  std::size_t order() const noexcept { return table.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }

  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) return b;
    }
    throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(a) + " has no inverse");
  }

  static OrientedGroup trivial() { return {{{0}}, {1}}; }

  /// {+1, -1} with epsilon = id; index 1 is -1.
  static OrientedGroup plus_minus() { return {{{0, 1}, {1, 0}}, {1, -1}}; }

  /// Z/m. With `alternating` (m even) epsilon(k) = (-1)^k, else epsilon = 1.
  static OrientedGroup cyclic(std::size_t m, bool alternating = false) {
    require(m >= 1, ErrorKind::InvalidArgument, "cyclic group of order 0");
    require(!alternating || m % 2 == 0, ErrorKind::InvalidArgument, "alternating orientation needs even order");
    OrientedGroup G;
    G.table.assign(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) G.table[a][b] = (a + b) % m;
      G.epsilon.push_back(alternating && a % 2 == 1 ? -1 : 1);
    }
    return G;
  }

  /// S_n with epsilon = sign. Permutations in lexicographic order, so the
  /// identity comes first; (ab)(i) = a(b(i)).
  static OrientedGroup symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    OrientedGroup G;
    G.table.assign(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
        G.table[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
      }
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) inversions += perms[a][i] > perms[a][j];
      }
      G.epsilon.push_back(inversions % 2 ? -1 : 1);
    }
    return G;
  }

  friend bool operator==(const OrientedGroup&, const OrientedGroup&) = default;
};

inline CheckReport check_oriented_group(const OrientedGroup& G) {
  CheckReport report;
  const std::size_t m = G.order();
  bool shape = m >= 1 && G.epsilon.size() == m;
  for (const auto& row : G.table) {
    shape = shape && row.size() == m;
    for (auto x : row) shape = shape && x < m;
  }
  if (!shape) {
    report.fail("table shape", {}, "table must be m x m with entries below m and one epsilon per element");
    return report;
  }
  std::vector<long> witness;
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    if (G.mul(0, a) != a || G.mul(a, 0) != a) witness = {long(a)};
  }
  if (witness.empty()) report.pass("identity");
  else report.fail("identity", witness, "element 0 is not neutral for " + std::to_string(witness[0]));

  witness.clear();
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    for (std::size_t b = 0; b < m && witness.empty(); ++b) {
      for (std::size_t c = 0; c < m && witness.empty(); ++c) {
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) witness = {long(a), long(b), long(c)};
      }
    }
  }
  if (witness.empty()) report.pass("associativity");
  else report.fail("associativity", witness, "(ab)c != a(bc)");

  witness.clear();
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m && !found; ++b) found = G.mul(a, b) == 0 && G.mul(b, a) == 0;
    if (!found) witness = {long(a)};
  }
  if (witness.empty()) report.pass("inverses");
  else report.fail("inverses", witness, "element " + std::to_string(witness[0]) + " has no inverse");

  witness.clear();
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    if (G.epsilon[a] != 1 && G.epsilon[a] != -1) witness = {long(a)};
  }
  if (witness.empty()) report.pass("epsilon values");
  else report.fail("epsilon values", witness, "epsilon must be +1 or -1");

  witness.clear();
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    for (std::size_t b = 0; b < m && witness.empty(); ++b) {
      if (G.epsilon[G.mul(a, b)] != G.epsilon[a] * G.epsilon[b]) witness = {long(a), long(b)};
    }
  }
  if (witness.empty()) report.pass("epsilon homomorphism");
  else report.fail("epsilon homomorphism", witness, "epsilon(ab) != epsilon(a) epsilon(b)");
  return report;
}

/// Dialgebra with a G-action; action[g] is the matrix of x -> gx.
struct OrientedDialgebra {
  Dialgebra base;
  OrientedGroup group;
  std::vector<Matrix> action;

  std::size_t dim() const noexcept { return base.dim(); }
  const Matrix& rho(std::size_t g) const { return action[g]; }

  /// The same dialgebra with the trivial group.
  static OrientedDialgebra with_trivial_group(const Dialgebra& D) {
    return {D, OrientedGroup::trivial(), {Matrix::identity(D.dim())}};
  }
};

inline Vector orbit_action(const OrientedDialgebra& OD, std::size_t g, const Vector& x) {
  require(g < OD.action.size(), ErrorKind::InvalidArgument, "group element out of range");
  require(x.size() == OD.dim(), ErrorKind::ShapeMismatch, "vector length differs from the dimension");
  return OD.rho(g) * x;
}

inline CheckReport check_oriented_dialgebra(const OrientedDialgebra& OD) {
  CheckReport report;
  const std::size_t d = OD.dim();
  const auto& G = OD.group;
  const std::size_t m = G.order();
  bool shape = OD.action.size() == m;
  for (const auto& a : OD.action) shape = shape && a.rows() == d && a.cols() == d;
  if (!shape) {
    report.fail("action shape", {}, "need one " + std::to_string(d) + "x" + std::to_string(d) + " matrix per group element");
    return report;
  }
  if (!check_oriented_group(G).ok()) {
    report.fail("oriented group", {}, "group table or epsilon is invalid");
    return report;
  }

  if (OD.rho(0) == Matrix::identity(d)) report.pass("identity acts trivially");
  else report.fail("identity acts trivially", {0}, "rho(e) != I");

  std::vector<long> witness;
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    for (std::size_t b = 0; b < m && witness.empty(); ++b) {
      if (OD.rho(a) * OD.rho(b) != OD.rho(G.mul(a, b))) witness = {long(a), long(b)};
    }
  }
  if (witness.empty()) report.pass("module composition");
  else report.fail("module composition", witness, "rho(g) rho(h) != rho(gh)");

  witness.clear();
  for (std::size_t a = 0; a < m && witness.empty(); ++a) {
    if (OD.rho(a) * OD.rho(G.inverse(a)) != Matrix::identity(d)) witness = {long(a)};
  }
  if (witness.empty()) report.pass("invertibility");
  else report.fail("invertibility", witness, "rho(g) rho(g^-1) != I");

  for (const bool left : {true, false}) {
    const Tensor3& T = left ? OD.base.left : OD.base.right;
    const std::string name = left ? "twisted multiplicativity (left product)" : "twisted multiplicativity (right product)";
    witness.clear();
    for (std::size_t g = 0; g < m && witness.empty(); ++g) {
      const Matrix& r = OD.rho(g);
      for (std::size_t i = 0; i < d && witness.empty(); ++i) {
        for (std::size_t j = 0; j < d && witness.empty(); ++j) {
          const Vector lhs = r * T.product(i, j);
          const Vector rhs = G.epsilon[g] == 1 ? T(r.column(i), r.column(j)) : T(r.column(j), r.column(i));
          if (lhs != rhs) witness = {long(g), long(i), long(j)};
        }
      }
    }
    if (witness.empty()) report.pass(name);
    else
      report.fail(name, witness,
                  "g = " + std::to_string(witness[0]) + " fails on (e" + std::to_string(witness[1]) + ", e" +
                      std::to_string(witness[2]) + ")");
  }
  return report;
}

}  // namespace dialg
