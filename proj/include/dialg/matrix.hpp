#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dialg/error.hpp"
#include "dialg/rational.hpp"

namespace dialg {

using Vector = std::vector<Rational>;

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

inline Vector operator+(Vector a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::ShapeMismatch, "vector sum of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::ShapeMismatch, "vector difference of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as nested vectors; all rows must have equal length.
  static Matrix from_rows(const std::vector<Vector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require(rows[r].size() == cols, ErrorKind::ShapeMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      require(columns[c].size() == rows, ErrorKind::ShapeMismatch, "column of wrong length");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!dialg::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& block, const Rational& scale = 1) {
    require(r0 + block.rows() <= rows_ && c0 + block.cols() <= cols_, ErrorKind::ShapeMismatch,
            "block does not fit");
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (std::size_t c = 0; c < block.cols(); ++c) {
        const auto& x = block(r, c);
        if (!dialg::is_zero(x)) (*this)(r0 + r, c0 + c) = scale * x;
      }
    }
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::ShapeMismatch, "matrix sum shapes");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::ShapeMismatch,
            "matrix difference shapes");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  // Skips zero entries of the left factor; the differentials are very sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::ShapeMismatch,
            "matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (dialg::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& y = b(k, j);
          if (!dialg::is_zero(y)) c(i, j) += x * y;
        }
      }
    }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    require(a.cols_ == v.size(), ErrorKind::ShapeMismatch, "matrix-vector product shapes");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (!dialg::is_zero(x) && !dialg::is_zero(v[k])) out[i] += x * v[k];
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// d x d x d structure constants: at(i, j, k) is the coefficient of e_k in
/// e_i * e_j.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  /// Bilinear evaluation on coordinate vectors.
  Vector operator()(const Vector& x, const Vector& y) const {
    require(x.size() == dim_ && y.size() == dim_, ErrorKind::ShapeMismatch, "tensor argument length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (dialg::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (dialg::is_zero(y[j])) continue;
        const Rational xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const auto& t = at(i, j, k);
          if (!dialg::is_zero(t)) out[k] += xy * t;
        }
      }
    }
    return out;
  }

  /// e_i * e_j as a coordinate vector.
  Vector product(std::size_t i, std::size_t j) const {
    Vector out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = at(i, j, k);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!dialg::is_zero(x)) return false;
    }
    return true;
  }

  std::span<const Rational> data() const { return data_; }
  std::span<Rational> data() { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) {
    require(a.dim_ == b.dim_, ErrorKind::ShapeMismatch, "tensor sum dims");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) {
    require(a.dim_ == b.dim_, ErrorKind::ShapeMismatch, "tensor difference dims");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

}  // namespace dialg
