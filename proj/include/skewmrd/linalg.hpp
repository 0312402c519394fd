#pragma once

// Dense exact linear algebra over any FieldLike domain.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace skewmrd {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  template <FieldLike F>
  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <FieldLike F>
Matrix<typename F::value_type> multiply(const F& f, const Matrix<typename F::value_type>& a,
                                        const Matrix<typename F::value_type>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<typename F::value_type> r(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(a(i, k), b(k, j)));
    }
  return r;
}

template <FieldLike F>
Matrix<typename F::value_type> add(const F& f, const Matrix<typename F::value_type>& a,
                                   const Matrix<typename F::value_type>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<typename F::value_type> r(a.rows(), a.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

template <FieldLike F>
std::vector<typename F::value_type> apply(const F& f, const Matrix<typename F::value_type>& a,
                                          const std::vector<typename F::value_type>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  std::vector<typename F::value_type> r(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] = f.add(r[i], f.mul(a(i, j), v[j]));
  return r;
}

/// Reduces m to reduced row echelon form in place; returns pivot columns.
template <FieldLike F>
std::vector<std::size_t> rref(const F& f, Matrix<typename F::value_type>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(inv, m(row, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldLike F>
std::size_t rank(const F& f, Matrix<typename F::value_type> m) {
  return rref(f, m).size();
}

/// Basis of {v : m v = 0}.
template <FieldLike F>
std::vector<std::vector<typename F::value_type>> kernel(const F& f, Matrix<typename F::value_type> m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with a x = b, or nullopt when the system is inconsistent.
template <FieldLike F>
std::optional<std::vector<typename F::value_type>> solve(const F& f, const Matrix<typename F::value_type>& a,
                                                        const std::vector<typename F::value_type>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  Matrix<typename F::value_type> aug(a.rows(), a.cols() + 1, f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(a.cols(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <FieldLike F>
std::optional<Matrix<typename F::value_type>> inverse(const F& f, const Matrix<typename F::value_type>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<typename F::value_type> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<typename F::value_type> inv(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Incrementally built row space in reduced echelon form. reduce() maps a
/// vector to a canonical representative of its coset modulo the span, which
/// makes it a linear projection.
template <FieldLike F>
class RowEchelon {
 public:
  using V = typename F::value_type;

  RowEchelon(const F& f, std::size_t width) : f_(&f), width_(width) {}

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }

  std::vector<V> reduce(std::vector<V> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (f_->is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] = f_->sub(v[j], f_->mul(c, rows_[r][j]));
    }
    return v;
  }

  bool contains(const std::vector<V>& v) const {
    for (const auto& c : reduce(v))
      if (!f_->is_zero(c)) return false;
    return true;
  }

  /// Adds v to the span; returns false (and changes nothing) if v was already in it.
  bool insert(const std::vector<V>& v) {
    if (v.size() != width_) throw std::invalid_argument("vector width mismatch");
    auto w = reduce(v);
    std::size_t piv = 0;
    while (piv < width_ && f_->is_zero(w[piv])) ++piv;
    if (piv == width_) return false;
    const auto inv = f_->inv(w[piv]);
    for (auto& c : w) c = f_->mul(inv, c);
    for (auto& row : rows_) {
      const auto c = row[piv];
      if (f_->is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] = f_->sub(row[j], f_->mul(c, w[j]));
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
  }

 private:
  const F* f_;
  std::size_t width_;
  std::vector<std::vector<V>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace skewmrd
