#pragma once

#include <string>
#include <vector>

#include "pezzo/algebra/unitary.hpp"

namespace pezzo::algebra {

/// Cubic etale subalgebra L inside Sym(B, tau); basis[0] is 1.
template <ExactField F>
struct CubicSub {
  using Sym = typename UnitaryAlgebra<F>::Sym;
  std::vector<Sym> basis;
  /// Set when L = F[u].
  std::optional<Sym> generator;
  std::string description;
};

template <ExactField F>
bool in_span(const std::vector<typename UnitaryAlgebra<F>::Sym>& span, const typename UnitaryAlgebra<F>::Sym& v,
             const F& f) {
  std::vector<std::vector<typename F::Elem>> cols(span.begin(), span.end());
  Matrix<F> a = Matrix<F>::from_columns(f, v.size(), cols);
  cols.push_back(v);
  Matrix<F> b = Matrix<F>::from_columns(f, v.size(), cols);
  return rank(a) == rank(b);
}

/// Validates closure, commutativity and etaleness of span(basis).
template <ExactField F>
CubicSub<F> make_cubic_sub(const UnitaryAlgebra<F>& alg, std::vector<typename UnitaryAlgebra<F>::Sym> basis,
                           std::string description) {
  const F& f = alg.base();
  if (basis.size() != 3) throw DomainError(ErrorCode::InvalidArgument, "cubic subalgebra needs 3 basis vectors");
  std::vector<std::vector<typename F::Elem>> cols(basis.begin(), basis.end());
  if (rank(Matrix<F>::from_columns(f, 9, cols)) != 3) {
    throw DomainError(ErrorCode::DegenerateSubalgebra, "basis of L is linearly dependent");
  }
  if (!in_span(basis, alg.sym_one(), f)) throw DomainError(ErrorCode::DegenerateSubalgebra, "L does not contain 1");
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      auto xy = alg.sym_to_matrix(x) * alg.sym_to_matrix(y);
      if (!(xy == alg.sym_to_matrix(y) * alg.sym_to_matrix(x))) {
        throw DomainError(ErrorCode::DegenerateSubalgebra, "L is not commutative");
      }
      if (!alg.is_symmetric(xy) || !in_span(basis, alg.matrix_to_sym(xy), f)) {
        throw DomainError(ErrorCode::DegenerateSubalgebra, "L is not closed under multiplication");
      }
    }
  }
  if (determinant(alg.gram(basis)).is_zero()) {
    throw DomainError(ErrorCode::DegenerateSubalgebra, "trace form is degenerate on L (not etale)");
  }
  return CubicSub<F>{std::move(basis), std::nullopt, std::move(description)};
}

/// L = F[u]; requires a squarefree characteristic polynomial.
template <ExactField F>
CubicSub<F> cubic_from_generator(const UnitaryAlgebra<F>& alg, const typename UnitaryAlgebra<F>::Sym& u) {
  Poly<F> chi = alg.charpoly(u);
  if (!is_squarefree(chi)) {
    throw DomainError(ErrorCode::DegenerateSubalgebra, "characteristic polynomial " + chi.to_string() + " is not squarefree");
  }
  auto sub = make_cubic_sub(alg, {alg.sym_one(), u, alg.sym_mul(u, u)}, "F[u], charpoly " + chi.to_string());
  sub.generator = u;
  return sub;
}

/// The diagonal subalgebra F^3 (split L).
template <ExactField F>
CubicSub<F> cubic_diagonal(const UnitaryAlgebra<F>& alg) {
  return make_cubic_sub(alg, {alg.sym_unit(0), alg.sym_unit(4), alg.sym_unit(8)}, "diagonal");
}

/// A symmetric element with characteristic polynomial f (monic cubic).
/// Split model: the companion matrix c as (c, c^t). Hermitian model: a
/// tridiagonal Hermitian matrix found by a deterministic search; throws
/// NotEmbeddable when the search fails.
template <ExactField F>
typename UnitaryAlgebra<F>::Sym symmetric_with_charpoly(const UnitaryAlgebra<F>& alg, const Poly<F>& f);

template <ExactField F>
CubicSub<F> cubic_from_minpoly(const UnitaryAlgebra<F>& alg, const Poly<F>& f) {
  if (f.degree() != 3 || !(f.lead() == alg.base().one())) {
    throw DomainError(ErrorCode::InvalidArgument, "expected a monic cubic");
  }
  if (!is_squarefree(f)) throw DomainError(ErrorCode::DegenerateSubalgebra, "cubic " + f.to_string() + " is not squarefree");
  return cubic_from_generator(alg, symmetric_with_charpoly(alg, f));
}

/// Basis of L^perp for the trace form (6 vectors).
template <ExactField F>
std::vector<typename UnitaryAlgebra<F>::Sym> orth_complement(const UnitaryAlgebra<F>& alg, const CubicSub<F>& l) {
  const F& f = alg.base();
  if (determinant(alg.gram(l.basis)).is_zero()) {
    throw DomainError(ErrorCode::DegenerateSubalgebra, "trace form is degenerate on L");
  }
  Matrix<F> m(f, 3, 9);
  auto sb = alg.sym_basis();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 9; ++k) m(i, k) = alg.trace_form(l.basis[i], sb[k]);
  }
  Matrix<F> ns = nullspace(m);
  std::vector<typename UnitaryAlgebra<F>::Sym> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(ns.col(j));
  return out;
}

/// Basis of F + L^perp: the identity followed by the L^perp basis.
template <ExactField F>
std::vector<typename UnitaryAlgebra<F>::Sym> f_plus_lperp(const UnitaryAlgebra<F>& alg, const CubicSub<F>& l) {
  std::vector<typename UnitaryAlgebra<F>::Sym> out{alg.sym_one()};
  for (auto& v : orth_complement(alg, l)) out.push_back(std::move(v));
  return out;
}

/// Split model: U (x) W^*, the rank-one matrix u w^t.
template <ExactField F>
typename UnitaryAlgebra<F>::Sym ideal_to_sym(const UnitaryAlgebra<F>& alg, const std::vector<typename F::Elem>& u,
                                             const std::vector<typename F::Elem>& w) {
  if (alg.kind() != Kind::SplitExchange) throw DomainError(ErrorCode::InvalidArgument, "ideal_to_sym needs the split model");
  typename UnitaryAlgebra<F>::Sym c(9, alg.base().zero());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) c[3 * i + j] = u[i] * w[j];
  }
  return c;
}

/// Result of simultaneous diagonalization: p^{-1} x p is diagonal for every
/// input matrix x. Columns of p are common eigenvectors.
template <ExactField F>
struct SplitCertificate {
  Matrix<F> p;
  Matrix<F> p_inv;
  std::vector<Matrix<F>> diagonal_images;
};

/// Simultaneously diagonalizes commuting 3x3 matrices generating a cubic
/// etale algebra over F. Throws NotSplitOverBase if some characteristic
/// polynomial has an irreducible factor of degree > 1.
template <ExactField F>
SplitCertificate<F> split_normalize_matrices(const F& f, const std::vector<Matrix<F>>& gens);

/// split_normalize for the split model: diagonalizes the first components.
template <ExactField F>
SplitCertificate<F> split_normalize(const UnitaryAlgebra<F>& alg, const CubicSub<F>& l) {
  if (alg.kind() != Kind::SplitExchange) {
    throw DomainError(ErrorCode::InvalidArgument, "split_normalize expects the split model; base change first");
  }
  std::vector<Matrix<F>> gens;
  for (const auto& b : l.basis) {
    Matrix<F> a(alg.base(), 3, 3);
    for (std::size_t i = 0; i < 9; ++i) a(i / 3, i % 3) = b[i];
    gens.push_back(std::move(a));
  }
  return split_normalize_matrices(alg.base(), gens);
}

template <ExactField F>
bool verify_split_certificate(const F& f, const std::vector<Matrix<F>>& gens, const SplitCertificate<F>& cert) {
  if (!(cert.p * cert.p_inv == Matrix<F>::identity(f, 3))) return false;
  std::vector<std::vector<typename F::Elem>> diag_vectors;
  for (const auto& g : gens) {
    Matrix<F> d = cert.p_inv * g * cert.p;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j && !d(i, j).is_zero()) return false;
      }
    }
    diag_vectors.push_back({d(0, 0), d(1, 1), d(2, 2)});
  }
  // The images must span all diagonal matrices.
  return rank(Matrix<F>::from_columns(f, 3, diag_vectors)) == 3;
}

}  // namespace pezzo::algebra

#include "pezzo/algebra/cubic_impl.hpp"
