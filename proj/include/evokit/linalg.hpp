#pragma once

// Dense exact linear algebra over any field type with value semantics
// (CycScalar, RationalFn). Subspaces are kept in canonical reduced row
// echelon form so equality of subspaces is equality of bases.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "evokit/errors.hpp"

namespace evokit {

template <class F>
concept FieldElement = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_flat(std::size_t rows, std::size_t cols, std::vector<T> data) {
    if (data.size() != rows * cols) throw DimensionMismatch("flat data has wrong length");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<long>(i * cols_),
            data_.begin() + static_cast<long>((i + 1) * cols_)};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  /// Row-major flattening.
  const std::vector<T>& flat() const { return data_; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class U, class T, class Fn>
Matrix<U> map_entries(const Matrix<T>& m, Fn&& fn) {
  std::vector<U> out;
  out.reserve(m.flat().size());
  for (const auto& x : m.flat()) out.push_back(fn(x));
  return Matrix<U>::from_flat(m.rows(), m.cols(), std::move(out));
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] = out[i] + a(i, k) * v[k];
    }
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape mismatch");
  std::vector<T> out;
  out.reserve(a.flat().size());
  for (std::size_t k = 0; k < a.flat().size(); ++k) out.push_back(a.flat()[k] - b.flat()[k]);
  return Matrix<T>::from_flat(a.rows(), a.cols(), std::move(out));
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape mismatch");
  std::vector<T> out;
  out.reserve(a.flat().size());
  for (std::size_t k = 0; k < a.flat().size(); ++k) out.push_back(a.flat()[k] + b.flat()[k]);
  return Matrix<T>::from_flat(a.rows(), a.cols(), std::move(out));
}

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x.is_zero(); });
}

template <FieldElement F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  F determinant_factor{1};          // product of pivots times row-swap sign
};

/// Gauss-Jordan elimination. Pivots are normalised to 1 and cleared above
/// and below, so the result is the unique reduced row echelon form.
template <FieldElement F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
      out.determinant_factor = -out.determinant_factor;
    }
    F p = m(row, col);
    out.determinant_factor = out.determinant_factor * p;
    if (!(p == F(1))) {
      F inv = F(1) / p;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      F factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) = m(r, j) - factor * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <FieldElement F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

template <FieldElement F>
F determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  auto r = rref(m);
  if (r.pivots.size() < m.rows()) return F(0);
  return r.determinant_factor;
}

/// Span of a family of vectors, stored as the nonzero rows of its RREF.
template <FieldElement F>
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<std::vector<F>>& generators) {
    SubspaceBasis out(ambient_dim);
    if (generators.empty()) return out;
    Matrix<F> m(generators.size(), ambient_dim, F(0));
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].size() != ambient_dim)
        throw DimensionMismatch("generator has wrong length");
      for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = generators[i][j];
    }
    auto r = rref(std::move(m));
    out.pivots_ = r.pivots;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out.vectors_.push_back(r.reduced.row(i));
    return out;
  }

  static SubspaceBasis coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
    std::vector<std::vector<F>> gens;
    for (std::size_t k : indices) {
      std::vector<F> v(ambient_dim, F(0));
      v.at(k) = F(1);
      gens.push_back(std::move(v));
    }
    return span(ambient_dim, gens);
  }

  static SubspaceBasis full(std::size_t ambient_dim) {
    std::vector<std::size_t> all(ambient_dim);
    for (std::size_t k = 0; k < ambient_dim; ++k) all[k] = k;
    return coordinate(ambient_dim, all);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<std::vector<F>>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (p < pivots_.size() && pivots_[p] == k) {
        ++p;
      } else {
        out.push_back(k);
      }
    }
    return out;
  }

  bool contains(std::vector<F> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector has wrong length for subspace");
    for (std::size_t r = 0; r < vectors_.size(); ++r) {
      F c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
        if (!vectors_[r][j].is_zero()) v[j] = v[j] - c * vectors_[r][j];
      }
    }
    return is_zero_vector(v);
  }

  bool is_subspace_of(const SubspaceBasis& other) const {
    return std::all_of(vectors_.begin(), vectors_.end(),
                       [&](const std::vector<F>& v) { return other.contains(v); });
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }
  friend bool operator!=(const SubspaceBasis& a, const SubspaceBasis& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<F>> vectors_;
  std::vector<std::size_t> pivots_;
};

template <FieldElement F>
bool in_span(const SubspaceBasis<F>& basis, const std::vector<F>& v) {
  return basis.contains(v);
}

/// Right null space of m.
template <FieldElement F>
SubspaceBasis<F> kernel_basis(const Matrix<F>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      const F& x = r.reduced(row, free);
      if (!x.is_zero()) v[r.pivots[row]] = -x;
    }
    gens.push_back(std::move(v));
  }
  return SubspaceBasis<F>::span(m.cols(), gens);
}

/// A solution of m x = b with free variables set to zero, or nothing.
template <FieldElement F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side has wrong length");
  Matrix<F> aug(m.rows(), m.cols() + 1, F(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t row = 0; row < r.pivots.size(); ++row) x[r.pivots[row]] = r.reduced(row, m.cols());
  return x;
}

template <FieldElement F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularMatrixError();
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

template <FieldElement F>
Matrix<F> hadamard_square(const Matrix<F>& m) {
  return map_entries<F>(m, [](const F& x) { return x * x; });
}

}  // namespace evokit
