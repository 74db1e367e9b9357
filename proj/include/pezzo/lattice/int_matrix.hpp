#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pezzo/fields/rational.hpp"

namespace pezzo::lattice {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> values);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, std::size_t rows);
  /// Parses [["1","-2"],["0","3"]]; entries may also be JSON integers.
  static IntMatrix parse_json(const std::string& text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  const std::vector<Integer>& data() const { return d_; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> col(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  bool is_zero() const;
  Integer trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  /// JSON array of arrays of decimal strings.
  std::string to_json() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> d_;
};

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m = h
  std::size_t rank = 0;
};

/// Row-style HNF: pivots positive, entries above a pivot reduced into
/// [0, pivot), zero rows last. Canonical for the row lattice.
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix s;  // diagonal, nonnegative, d1 | d2 | ...
  IntMatrix u;  // unimodular rows
  IntMatrix v;  // unimodular columns, u * m * v = s
  std::vector<Integer> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}; saturated, HNF-canonical.
IntMatrix kernel_basis(const IntMatrix& m);
/// Canonical basis (columns) of the lattice spanned by the columns of m.
IntMatrix image_basis(const IntMatrix& m);
/// Canonical basis (columns) of (Q-span of columns) intersected with Z^n.
IntMatrix saturate(const IntMatrix& m);
/// Unique integer x with m x = b for m of full column rank, if it exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b);
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);
Integer content(const std::vector<Integer>& v);

}  // namespace pezzo::lattice
