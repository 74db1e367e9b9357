#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pezzo/error.hpp"
#include "pezzo/fields/matrix.hpp"
#include "pezzo/fields/poly.hpp"
#include "pezzo/fields/quad_ext.hpp"

namespace pezzo::algebra {

enum class Kind { SplitExchange, HermitianConj };

inline const char* kind_name(Kind k) { return k == Kind::SplitExchange ? "split_exchange" : "hermitian"; }

/// 3x3 helpers valid over any commutative ring descriptor.
template <class R>
typename R::Elem det3(const Matrix<R>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class R>
typename R::Elem minor_sum3(const Matrix<R>& m) {
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
}

/// Classical adjugate (transpose of the cofactor matrix).
template <class R>
Matrix<R> adjugate3(const Matrix<R>& m) {
  Matrix<R> a(m.field(), 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      auto cof = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      a(i, j) = (i + j) % 2 ? -cof : cof;
    }
  }
  return a;
}

/// Central simple algebra of degree 3 over an etale quadratic K/F with a
/// unitary involution, realized as M_3(K) with X -> conj(X)^t.
///
/// SplitExchange uses K = F[w]/(w^2 - w) = F x F; the first factor is w -> 1,
/// so X = a w + b (1 - w) is the pair (a, b) and the involution is
/// (a, b) -> (b^t, a^t).
///
/// Sym coordinates (9 entries, row-major position (i, j)):
///   split:     entry a_ij of a, for the symmetric element (a, a^t);
///   hermitian: X_ii on the diagonal; for i < j, position (i, j) is the
///              1-component and position (j, i) the w-component of X_ij.
template <ExactField F>
class UnitaryAlgebra {
 public:
  using Base = typename F::Elem;
  using K = QuadExt<F>;
  using KElem = typename K::Elem;
  using KMat = Matrix<K>;
  using Sym = std::vector<Base>;

  static UnitaryAlgebra split_exchange(const F& f) {
    return UnitaryAlgebra(Kind::SplitExchange, K(f, f.one(), f.zero(), std::make_pair(f.one(), f.zero())));
  }

  /// K = F[w]/(w^2 - t w - n); throws NoQuadraticExtension if it splits.
  static UnitaryAlgebra hermitian(const F& f, const Base& t, const Base& n) {
    Poly<F> poly(f, {-n, -t, f.one()});
    if (!roots(poly).empty()) throw DomainError(ErrorCode::NoQuadraticExtension, "w^2 - t w - n has a root in the base field");
    return UnitaryAlgebra(Kind::HermitianConj, K(f, t, n));
  }

  Kind kind() const { return kind_; }
  const F& base() const { return f_; }
  const K& center() const { return k_; }
  static constexpr std::size_t kDim = 18;
  static constexpr std::size_t kSymDim = 9;

  KMat zero_matrix() const { return KMat(k_, 3, 3); }
  KMat identity() const { return KMat::identity(k_, 3); }

  KMat tau(const KMat& x) const {
    KMat t(k_, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = x(j, i).conj();
    }
    return t;
  }

  /// F-basis of the algebra: index 2*(3i+j)+c is E_ij times (1, w)[c].
  KMat basis_element(std::size_t idx) const {
    KMat m = zero_matrix();
    const std::size_t pos = idx / 2;
    m(pos / 3, pos % 3) = idx % 2 == 0 ? k_.one() : k_.omega();
    return m;
  }
  std::vector<Base> coords(const KMat& x) const {
    std::vector<Base> c;
    for (std::size_t p = 0; p < 9; ++p) {
      c.push_back(x(p / 3, p % 3).re());
      c.push_back(x(p / 3, p % 3).im());
    }
    return c;
  }
  KMat from_coords(const std::vector<Base>& c) const {
    KMat m = zero_matrix();
    for (std::size_t p = 0; p < 9; ++p) m(p / 3, p % 3) = k_.make(c[2 * p], c[2 * p + 1]);
    return m;
  }

  /// table[i][j] = coordinates of basis_i * basis_j.
  std::vector<std::vector<std::vector<Base>>> structure_constants() const {
    std::vector<std::vector<std::vector<Base>>> t(kDim, std::vector<std::vector<Base>>(kDim));
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) t[i][j] = coords(basis_element(i) * basis_element(j));
    }
    return t;
  }

  /// Column j holds the coordinates of tau(basis_j).
  Matrix<F> involution_matrix() const {
    std::vector<std::vector<Base>> cols;
    for (std::size_t j = 0; j < kDim; ++j) cols.push_back(coords(tau(basis_element(j))));
    return Matrix<F>::from_columns(f_, kDim, cols);
  }

  KMat sym_to_matrix(const Sym& c) const {
    KMat m = zero_matrix();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (kind_ == Kind::SplitExchange) {
          // a_ij w + a_ji (1 - w)
          m(i, j) = k_.make(c[3 * j + i], c[3 * i + j] - c[3 * j + i]);
        } else if (i == j) {
          m(i, i) = k_.from_base(c[4 * i]);
        } else if (i < j) {
          m(i, j) = k_.make(c[3 * i + j], c[3 * j + i]);
        } else {
          m(i, j) = k_.make(c[3 * j + i], c[3 * i + j]).conj();
        }
      }
    }
    return m;
  }

  bool is_symmetric(const KMat& x) const { return tau(x) == x; }

  Sym matrix_to_sym(const KMat& x) const {
    if (!is_symmetric(x)) throw DomainError(ErrorCode::InvalidArgument, "element is not tau-symmetric");
    Sym c(9, f_.zero());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (kind_ == Kind::SplitExchange) {
          c[3 * i + j] = x(i, j).re() + x(i, j).im();
        } else if (i == j) {
          c[4 * i] = x(i, i).re();
        } else if (i < j) {
          c[3 * i + j] = x(i, j).re();
          c[3 * j + i] = x(i, j).im();
        }
      }
    }
    return c;
  }

  Sym sym_unit(std::size_t idx) const {
    Sym c(9, f_.zero());
    c[idx] = f_.one();
    return c;
  }
  Sym sym_one() const { return matrix_to_sym(identity()); }
  Sym sym_zero() const { return Sym(9, f_.zero()); }
  std::vector<Sym> sym_basis() const {
    std::vector<Sym> b;
    for (std::size_t i = 0; i < 9; ++i) b.push_back(sym_unit(i));
    return b;
  }

  /// Product of two symmetric elements; throws unless it is symmetric.
  Sym sym_mul(const Sym& a, const Sym& b) const { return matrix_to_sym(sym_to_matrix(a) * sym_to_matrix(b)); }

  Base trd(const Sym& x) const { return to_base(trace3(sym_to_matrix(x))); }
  Base s_form(const Sym& x) const { return to_base(minor_sum3(sym_to_matrix(x))); }
  Base nrd(const Sym& x) const { return to_base(det3(sym_to_matrix(x))); }
  /// x^# = x^2 - Trd(x) x + S(x) 1, the classical adjugate.
  Sym sharp(const Sym& x) const { return matrix_to_sym(adjugate3(sym_to_matrix(x))); }

  Base trace_form(const Sym& x, const Sym& y) const {
    return to_base(trace3(sym_to_matrix(x) * sym_to_matrix(y)));
  }
  Matrix<F> gram(const std::vector<Sym>& basis) const {
    Matrix<F> g(f_, basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_form(basis[i], basis[j]);
    }
    return g;
  }

  /// Characteristic polynomial t^3 - Trd t^2 + S t - Nrd over F.
  Poly<F> charpoly(const Sym& x) const { return Poly<F>(f_, {-nrd(x), s_form(x), -trd(x), f_.one()}); }

 private:
  UnitaryAlgebra(Kind kind, K k) : kind_(kind), f_(k.base()), k_(std::move(k)) {}

  static KElem trace3(const KMat& m) { return m(0, 0) + m(1, 1) + m(2, 2); }
  Base to_base(const KElem& x) const {
    if (!x.in_base()) throw DomainError(ErrorCode::InvalidArgument, "value is not in the base field");
    return x.re();
  }

  Kind kind_;
  F f_;
  K k_;
};

}  // namespace pezzo::algebra
