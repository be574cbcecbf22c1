#pragma once

// Exact linear algebra over Q. Elimination runs on sparse integer rows
// (denominators cleared, content divided out after every row operation) so
// that entries stay small. Pivoting is deterministic: columns are visited in
// order and the pivot is the lowest-indexed remaining row with a nonzero entry
// in that column.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dialg/error.hpp"
#include "dialg/matrix.hpp"

namespace dialg {

namespace detail {

struct SparseEntry {
  std::size_t col;
  Integer value;
};

using SparseRow = std::vector<SparseEntry>;

inline void remove_content(SparseRow& row) {
  if (row.empty()) return;
  Integer g = abs(row.front().value);
  for (std::size_t i = 1; i < row.size() && g != 1; ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].value.get_mpz_t());
  }
  if (g > 1) {
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

/// Row of a rational matrix scaled to a primitive integer row.
inline SparseRow integer_row(std::span<const Rational> row) {
  Integer lcm = 1;
  for (const auto& x : row) {
    if (!is_zero(x)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c) {
    const auto& x = row[c];
    if (is_zero(x)) continue;
    Integer v = x.get_num() * (lcm / x.get_den());
    out.push_back({c, std::move(v)});
  }
  remove_content(out);
  return out;
}

inline const Integer* find_entry(const SparseRow& row, std::size_t col) {
  std::size_t lo = 0;
  std::size_t hi = row.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (row[mid].col < col) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return (lo < row.size() && row[lo].col == col) ? &row[lo].value : nullptr;
}

/// target <- a * target - b * source, then made primitive.
inline void combine(SparseRow& target, const Integer& a, const Integer& b, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].col < source[j].col)) {
      out.push_back({target[i].col, a * target[i].value});
      ++i;
    } else if (i == target.size() || source[j].col < target[i].col) {
      out.push_back({source[j].col, -b * source[j].value});
      ++j;
    } else {
      Integer v = a * target[i].value - b * source[j].value;
      if (v != 0) out.push_back({target[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  remove_content(out);
  target = std::move(out);
}

/// Row echelon form. rows[r] has its leading entry in column pivots[r]; with
/// `reduced` every pivot column is zero outside its pivot row.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;
};

inline Echelon echelonize(const Matrix& m, bool reduced) {
  Echelon result;
  result.cols = m.cols();
  std::vector<SparseRow> work;
  work.reserve(m.rows());
  std::vector<std::vector<std::size_t>> by_lead(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    work.push_back(integer_row(m.row(r)));
    if (!work.back().empty()) by_lead[work.back().front().col].push_back(r);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& bucket = by_lead[c];
    if (bucket.empty()) continue;
    std::size_t pivot_pos = 0;
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      if (bucket[k] < bucket[pivot_pos]) pivot_pos = k;
    }
    const std::size_t pivot_row = bucket[pivot_pos];
    const SparseRow& pivot = work[pivot_row];
    const Integer& pv = pivot.front().value;
    for (std::size_t k = 0; k < bucket.size(); ++k) {
      if (k == pivot_pos) continue;
      SparseRow& row = work[bucket[k]];
      const Integer rv = row.front().value;
      const Integer g = gcd(pv, rv);
      combine(row, pv / g, rv / g, pivot);
      if (!row.empty()) by_lead[row.front().col].push_back(bucket[k]);
    }
    result.rows.push_back(std::move(work[pivot_row]));
    result.pivots.push_back(c);
    bucket.clear();
    bucket.shrink_to_fit();
  }
  if (reduced) {
    for (std::size_t r = result.rows.size(); r-- > 0;) {
      const std::size_t pc = result.pivots[r];
      const SparseRow& pivot = result.rows[r];
      const Integer& pv = pivot.front().value;
      for (std::size_t s = 0; s < r; ++s) {
        const Integer* entry = find_entry(result.rows[s], pc);
        if (entry == nullptr) continue;
        const Integer sv = *entry;
        const Integer g = gcd(pv, sv);
        combine(result.rows[s], pv / g, sv / g, pivot);
      }
    }
  }
  for (auto& row : result.rows) {
    if (row.front().value < 0) {
      for (auto& e : row) e.value = -e.value;
    }
  }
  return result;
}

inline void check_cells(std::size_t rows, std::size_t cols, std::size_t cap, const char* what) {
  if (cap != 0 && rows != 0 && cols > cap / rows) {
    throw Error(ErrorKind::Resource, std::string(what) + " would need a " + std::to_string(rows) +
                                         "x" + std::to_string(cols) + " matrix");
  }
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) { return detail::echelonize(m, false).rows.size(); }

/// Basis of ker(m) in reduced-echelon parametrization: one vector per free
/// column f (ascending), with coordinate f equal to 1 and the other free
/// coordinates 0.
inline std::vector<Vector> nullspace(const Matrix& m) {
  const auto ech = detail::echelonize(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : ech.pivots) is_pivot[pc] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      const Integer* entry = detail::find_entry(ech.rows[r], f);
      if (entry == nullptr) continue;
      Rational x(-*entry, ech.rows[r].front().value);
      x.canonicalize();
      v[ech.pivots[r]] = x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some u with m u = v, or nothing when v is outside the column space. Free
/// coordinates of u are 0.
inline std::optional<Vector> in_image(const Matrix& m, const Vector& v) {
  require(v.size() == m.rows(), ErrorKind::ShapeMismatch,
          "in_image: vector length " + std::to_string(v.size()) + " vs " + std::to_string(m.rows()) +
              " rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = v[r];
  }
  const auto ech = detail::echelonize(aug, true);
  Vector u(m.cols());
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivots[r] == m.cols()) return std::nullopt;
    const Integer* entry = detail::find_entry(ech.rows[r], m.cols());
    if (entry == nullptr) continue;
    Rational x(*entry, ech.rows[r].front().value);
    x.canonicalize();
    u[ech.pivots[r]] = x;
  }
  return u;
}

/// Scales v so that its first nonzero coordinate is 1.
inline Vector normalize_leading(Vector v) {
  for (const auto& x : v) {
    if (!is_zero(x)) {
      const Rational inv = 1 / x;
      for (auto& y : v) y *= inv;
      break;
    }
  }
  return v;
}

struct CohomologyResult {
  std::size_t dim = 0;
  /// Cocycles whose classes form a basis of the cohomology group, each with
  /// leading coordinate 1.
  std::vector<Vector> representatives;
};

namespace detail {

inline void check_composable(const Matrix& d_out, const Matrix& d_in) {
  if (d_out.cols() != d_in.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "middle space mismatch: " + std::to_string(d_out.cols()) +
                                              " vs " + std::to_string(d_in.rows()));
  }
  if (!(d_out * d_in).is_zero()) {
    throw Error(ErrorKind::NonComplex, "composite of consecutive differentials is nonzero");
  }
}

}  // namespace detail

/// dim ker(d_out) - rank(d_in) for a composable pair with d_out d_in = 0.
inline std::size_t cohomology_dim(const Matrix& d_out, const Matrix& d_in) {
  detail::check_composable(d_out, d_in);
  return d_out.cols() - rank(d_out) - rank(d_in);
}

/// Cohomology at the middle space with representatives: kernel vectors of
/// d_out that are pivot columns of [d_in | kernel basis].
inline CohomologyResult cohomology(const Matrix& d_out, const Matrix& d_in) {
  detail::check_composable(d_out, d_in);
  const auto kernel = nullspace(d_out);
  const std::size_t middle = d_out.cols();
  Matrix stacked(middle, d_in.cols() + kernel.size());
  for (std::size_t r = 0; r < middle; ++r) {
    for (std::size_t c = 0; c < d_in.cols(); ++c) stacked(r, c) = d_in(r, c);
    for (std::size_t k = 0; k < kernel.size(); ++k) stacked(r, d_in.cols() + k) = kernel[k][r];
  }
  const auto ech = detail::echelonize(stacked, false);
  CohomologyResult result;
  for (auto pc : ech.pivots) {
    if (pc >= d_in.cols()) result.representatives.push_back(normalize_leading(kernel[pc - d_in.cols()]));
  }
  result.dim = result.representatives.size();
  return result;
}

}  // namespace dialg
