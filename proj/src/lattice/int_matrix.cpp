#include "pezzo/lattice/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "pezzo/error.hpp"
#include "pezzo/fields/matrix.hpp"

namespace pezzo::lattice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : rows_(rows), cols_(cols) {
  if (values.size() != rows * cols) throw DomainError(ErrorCode::InvalidArgument, "matrix data size mismatch");
  for (long v : values) d_.emplace_back(v);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> values)
    : rows_(rows), cols_(cols), d_(std::move(values)) {
  if (d_.size() != rows * cols) throw DomainError(ErrorCode::InvalidArgument, "matrix data size mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DomainError(ErrorCode::InvalidArgument, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(ErrorCode::ParseError, std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_array()) throw DomainError(ErrorCode::ParseError, "matrix must be an array of rows");
  std::size_t cols = j.empty() ? 0 : j[0].size();
  std::vector<Integer> data;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw DomainError(ErrorCode::ParseError, "ragged matrix rows");
    for (const auto& e : row) {
      if (e.is_string()) {
        data.push_back(parse_integer(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        data.emplace_back(e.get<long>());
      } else {
        throw DomainError(ErrorCode::ParseError, "matrix entries must be integers");
      }
    }
  }
  return IntMatrix(j.size(), cols, std::move(data));
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return std::vector<Integer>(d_.begin() + i * cols_, d_.begin() + (i + 1) * cols_);
}

std::vector<Integer> IntMatrix::col(std::size_t j) const {
  std::vector<Integer> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  }
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError(ErrorCode::InvalidArgument, "matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] += b.d_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError(ErrorCode::InvalidArgument, "matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.d_.size(); ++i) c.d_[i] -= b.d_[i];
  return c;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw DomainError(ErrorCode::InvalidArgument, "vector length mismatch");
  std::vector<Integer> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

std::string IntMatrix::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t k = 0; k < cols_; ++k) r.push_back((*this)(i, k).get_str());
    j.push_back(std::move(r));
  }
  return j.dump();
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError(ErrorCode::InvalidArgument, "hstack row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError(ErrorCode::InvalidArgument, "vstack column mismatch");
  std::vector<Integer> d = a.data();
  d.insert(d.end(), b.data().begin(), b.data().end());
  return IntMatrix(a.rows() + b.rows(), a.cols(), std::move(d));
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && sgn(a(sel, k)) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(sel, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool pivot = false;
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      pivot = true;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (sgn(h(i, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot) continue;
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: nonzero entry of minimal absolute value in the trailing block.
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(s(i, j)) == 0) continue;
          if (bi == rows || abs(s(i, j)) < abs(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      swap_rows(s, t, bi);
      swap_rows(u, t, bi);
      swap_cols(s, t, bj);
      swap_cols(v, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(s(i, t)) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(u, i, t, q);
        if (sgn(s(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(s(t, j)) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(v, j, t, q);
        if (sgn(s(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            row_axpy(s, t, i, Integer(-1));
            row_axpy(u, t, i, Integer(-1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (sgn(s(t, t)) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  SmithForm out{std::move(s), std::move(u), std::move(v), {}};
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(out.s(i, i));
  return out;
}

namespace {

// Canonical basis (as columns) of the row lattice of `rows`.
IntMatrix canonical_columns(const IntMatrix& rows) {
  HermiteForm hf = hermite_normal_form(rows);
  return hf.h.rows_range(0, hf.rank).transpose();
}

}  // namespace

IntMatrix kernel_basis(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m.transpose());
  const std::size_t n = m.cols();
  IntMatrix k = hf.u.rows_range(hf.rank, n - hf.rank);
  if (k.rows() == 0) return IntMatrix(n, 0);
  return canonical_columns(k);
}

IntMatrix image_basis(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(m.rows(), 0);
  return canonical_columns(m.transpose());
}

IntMatrix saturate(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(m.rows(), 0);
  SmithForm sf = smith_normal_form(m);
  std::size_t r = 0;
  while (r < sf.diagonal.size() && sgn(sf.diagonal[r]) != 0) ++r;
  if (r == 0) return IntMatrix(m.rows(), 0);
  // m = u^{-1} s v^{-1}: the first r columns of u^{-1} span the saturation.
  Matrix<RationalField> uq(RationalField{}, sf.u.rows(), sf.u.cols());
  for (std::size_t i = 0; i < sf.u.rows(); ++i) {
    for (std::size_t j = 0; j < sf.u.cols(); ++j) uq(i, j) = Rational(sf.u(i, j));
  }
  Matrix<RationalField> ui = inverse(uq);
  IntMatrix cols(r, m.rows());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) cols(j, i) = ui(i, j).num();
  }
  return canonical_columns(cols);
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw DomainError(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  Matrix<RationalField> mq(RationalField{}, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) mq(i, j) = Rational(m(i, j));
  }
  std::vector<Rational> bq;
  for (const auto& x : b) bq.emplace_back(x);
  std::vector<Rational> x;
  try {
    x = solve(mq, bq);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  std::vector<Integer> out;
  for (const auto& xi : x) {
    if (!xi.is_integer()) return std::nullopt;
    out.push_back(xi.num());
  }
  if (m.apply(out) != b) return std::nullopt;
  return out;
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  return image_basis(a) == image_basis(b);
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace pezzo::lattice
