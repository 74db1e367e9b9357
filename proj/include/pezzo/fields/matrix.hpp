#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pezzo/error.hpp"
#include "pezzo/fields/field.hpp"

namespace pezzo {

/// Dense row-major matrix over an exact field (or commutative ring for the
/// operations that do not divide).
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : f_(std::move(field)), rows_(rows), cols_(cols), d_(rows * cols, f_.zero()) {}
  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
      : f_(std::move(field)), rows_(rows), cols_(cols), d_(std::move(data)) {
    if (d_.size() != rows * cols) throw DomainError(ErrorCode::InvalidArgument, "matrix data size mismatch");
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<std::vector<Elem>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const F& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  const std::vector<Elem>& data() const { return d_; }

  std::vector<Elem> row(std::size_t i) const {
    return std::vector<Elem>(d_.begin() + i * cols_, d_.begin() + (i + 1) * cols_);
  }
  std::vector<Elem> col(std::size_t j) const {
    std::vector<Elem> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_zero() const {
    for (const auto& x : d_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix c(a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] = c.d_[i] + b.d_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] = c.d_[i] - b.d_[i];
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    std::vector<Elem> out(rows_, f_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    }
    return out;
  }

 private:
  F f_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> d_;
};

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    }
    auto inv = m.field().one() / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      auto factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
Matrix<F> rref(Matrix<F> m) {
  rref_in_place(m);
  return m;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_in_place(m).size();
}

/// Basis of the right null space, one column per free variable (RREF order).
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  Matrix<F> r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix<F>::from_columns(m.field(), m.cols(), basis);
}

/// Solves m x = b; throws InvalidArgument when inconsistent. Free variables 0.
template <class F>
std::vector<typename F::Elem> solve(const Matrix<F>& m, const std::vector<typename F::Elem>& b) {
  Matrix<F> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) {
    throw DomainError(ErrorCode::InvalidArgument, "inconsistent linear system");
  }
  std::vector<typename F::Elem> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

template <class F>
typename F::Elem determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DomainError(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  auto det = m.field().one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c).is_zero()) ++sel;
    if (sel == n) return m.field().zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    auto inv = m.field().one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      auto factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - factor * m(c, j);
    }
  }
  return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  Matrix<F> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError(ErrorCode::DivisionByZero, "singular matrix");
  Matrix<F> out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

}  // namespace pezzo
