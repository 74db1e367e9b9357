#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pezzo/error.hpp"
#include "pezzo/fields/field.hpp"

namespace pezzo {

/// Univariate polynomial, coefficients low to high, trimmed (zero = empty).
template <ExactField F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(F field) : f_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const F& field, const Elem& c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, field.zero());
    v[deg] = c;
    return Poly(field, std::move(v));
  }
  static Poly from_ints(const F& field, const std::vector<long>& coeffs) {
    std::vector<Elem> v;
    for (long c : coeffs) v.push_back(field.from_int(c));
    return Poly(field, std::move(v));
  }

  const F& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  Elem lead() const { return c_.empty() ? f_.zero() : c_.back(); }

  Elem eval(const Elem& x) const {
    Elem acc = f_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * f_.from_int(static_cast<long>(i)));
    return Poly(f_, std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Elem li = f_.one() / lead();
    std::vector<Elem> v;
    for (const auto& c : c_) v.push_back(c * li);
    return Poly(f_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Poly(a.f_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
    return Poly(a.f_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.f_, std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Elem> r = c_;
    std::vector<Elem> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, f_.zero());
    const Elem li = f_.one() / d.lead();
    while (r.size() >= d.c_.size() && !r.empty()) {
      Elem factor = r.back() * li;
      std::size_t shift = r.size() - d.c_.size();
      quo[shift] = factor;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r[shift + i] = r[shift + i] - factor * d.c_[i];
      r.pop_back();
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(r))};
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + elem_to_string(c_[i]);
    return s + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F f_;
  std::vector<Elem> c_;
};

template <ExactField F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <ExactField F>
bool is_squarefree(const Poly<F>& f) {
  return poly_gcd(f, f.derivative()).degree() == 0;
}

/// Distinct roots in F_q by exhaustive evaluation, ascending by code.
std::vector<GFElem> roots(const Poly<GF>& f);
/// Distinct rational roots, ascending (rational root theorem).
std::vector<Rational> roots(const Poly<RationalField>& f);

/// find_irreducible(p, k) as a polynomial over the prime field.
Poly<GF> find_irreducible(std::uint32_t p, std::uint32_t k);

/// Degrees of the irreducible factors of a squarefree polynomial over F_q,
/// sorted ascending (distinct-degree factorization).
std::vector<int> factor_degrees(const Poly<GF>& f);

}  // namespace pezzo
