#pragma once

// Template definitions for cubic.hpp.

#include <algorithm>
#include <numeric>

namespace pezzo::algebra {

namespace detail {

inline std::vector<GFElem> scalar_candidates(const GF& f) { return f.elements(); }
inline std::vector<Rational> scalar_candidates(const RationalField&) {
  std::vector<Rational> out{Rational(0)};
  for (long k = 1; k <= 3; ++k) {
    out.emplace_back(k);
    out.emplace_back(-k);
  }
  return out;
}

inline std::vector<GFElem> norm_search_values(const GF& f) { return f.elements(); }
inline std::vector<Rational> norm_search_values(const RationalField&) {
  std::vector<Rational> out{Rational(0)};
  for (long m = 1; m <= 4; ++m) {
    for (long k = 1; k <= 12; ++k) {
      if (std::gcd(k, m) != 1) continue;
      out.emplace_back(Integer(k), Integer(m));
      out.emplace_back(Integer(-k), Integer(m));
    }
  }
  return out;
}

template <ExactField F>
std::optional<typename QuadExt<F>::Elem> norm_preimage(const QuadExt<F>& k, const typename F::Elem& n) {
  const auto vals = norm_search_values(k.base());
  for (const auto& y : vals) {
    for (const auto& x : vals) {
      auto e = k.make(x, y);
      if (e.norm() == n) return e;
    }
  }
  return std::nullopt;
}

}  // namespace detail

template <ExactField F>
typename UnitaryAlgebra<F>::Sym symmetric_with_charpoly(const UnitaryAlgebra<F>& alg, const Poly<F>& f) {
  using Sym = typename UnitaryAlgebra<F>::Sym;
  const F& fld = alg.base();
  // f = t^3 - e1 t^2 + e2 t - e3
  const auto e1 = -f.coeff(2), e2 = f.coeff(1), e3 = -f.coeff(0);
  if (alg.kind() == Kind::SplitExchange) {
    Sym c(9, fld.zero());
    c[3 * 1 + 0] = fld.one();
    c[3 * 2 + 1] = fld.one();
    c[3 * 0 + 2] = e3;
    c[3 * 1 + 2] = -e2;
    c[3 * 2 + 2] = e1;
    return c;
  }
  // Tridiagonal [[a1, b1, 0], [b1', a2, b2], [0, b2', a3]] has characteristic
  // polynomial (t-a1)(t-a2)(t-a3) - n1 (t-a3) - n2 (t-a1) with n_i = N(b_i).
  const auto& k = alg.center();
  for (const auto& a1 : detail::scalar_candidates(fld)) {
    for (const auto& a3 : detail::scalar_candidates(fld)) {
      if (a1 == a3) continue;
      const auto a2 = e1 - a1 - a3;
      const auto sigma2 = a1 * a2 + a1 * a3 + a2 * a3;
      const auto lin = sigma2 - e2;        // n1 + n2
      const auto cst = a1 * a2 * a3 - e3;  // a3 n1 + a1 n2
      const auto n1 = (lin * a1 - cst) / (a1 - a3);
      const auto n2 = lin - n1;
      auto b1 = detail::norm_preimage(k, n1);
      if (!b1) continue;
      auto b2 = detail::norm_preimage(k, n2);
      if (!b2) continue;
      auto m = alg.zero_matrix();
      m(0, 0) = k.from_base(a1);
      m(1, 1) = k.from_base(a2);
      m(2, 2) = k.from_base(a3);
      m(0, 1) = *b1;
      m(1, 0) = b1->conj();
      m(1, 2) = *b2;
      m(2, 1) = b2->conj();
      Sym u = alg.matrix_to_sym(m);
      if (alg.charpoly(u) == f) return u;
    }
  }
  throw DomainError(ErrorCode::NotEmbeddable, "no Hermitian matrix with characteristic polynomial " + f.to_string() + " found");
}

template <ExactField F>
SplitCertificate<F> split_normalize_matrices(const F& f, const std::vector<Matrix<F>>& gens) {
  std::vector<Matrix<F>> spaces{Matrix<F>::identity(f, 3)};
  for (const auto& g : gens) {
    Poly<F> chi(f, {-det3(g), minor_sum3(g), -(g(0, 0) + g(1, 1) + g(2, 2)), f.one()});
    auto rts = roots(chi);
    int found = 0;
    for (const auto& r : rts) {
      Poly<F> lin(f, {-r, f.one()});
      Poly<F> rest = chi;
      while (rest.degree() > 0) {
        auto [q, rem] = rest.divmod(lin);
        if (!rem.is_zero()) break;
        rest = q;
        ++found;
      }
    }
    if (found != 3) {
      throw DomainError(ErrorCode::NotSplitOverBase, "characteristic polynomial " + chi.to_string() + " does not split over the base field");
    }
    std::vector<Matrix<F>> refined;
    for (const auto& w : spaces) {
      std::size_t covered = 0;
      for (const auto& r : rts) {
        Matrix<F> shifted = g;
        for (std::size_t i = 0; i < 3; ++i) shifted(i, i) = shifted(i, i) - r;
        Matrix<F> ns = nullspace(shifted * w);
        if (ns.cols() == 0) continue;
        refined.push_back(w * ns);
        covered += ns.cols();
      }
      if (covered != w.cols()) throw DomainError(ErrorCode::DegenerateSubalgebra, "L contains a non-semisimple element");
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != 3) throw DomainError(ErrorCode::DegenerateSubalgebra, "L does not separate the eigenlines");
  // Canonical order: by index of the first nonzero entry, scaled to 1 there.
  std::vector<std::pair<std::size_t, std::vector<typename F::Elem>>> keyed;
  for (const auto& s : spaces) {
    auto v = s.col(0);
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    const auto inv = f.one() / v[lead];
    for (auto& x : v) x = x * inv;
    keyed.emplace_back(lead, std::move(v));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<typename F::Elem>> cols;
  for (auto& kv : keyed) cols.push_back(std::move(kv.second));
  SplitCertificate<F> cert{Matrix<F>::from_columns(f, 3, cols), Matrix<F>(f, 3, 3), {}};
  cert.p_inv = inverse(cert.p);
  for (const auto& g : gens) cert.diagonal_images.push_back(cert.p_inv * g * cert.p);
  return cert;
}

}  // namespace pezzo::algebra
