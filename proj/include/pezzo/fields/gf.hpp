#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pezzo {

namespace detail {

/// Lookup tables for F_{p^k} presented as F_p[x]/(modulus). Element codes are
/// base-p digit strings: code = sum c_i p^i for the class of sum c_i x^i.
struct GFData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, low to high, size k+1
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> inv_table;
  std::vector<std::uint32_t> frob_table;
  // Dense q*q tables, present only for q <= kDenseLimit.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;

  static constexpr std::uint32_t kDenseLimit = 1024;

  bool dense() const { return !add_table.empty(); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (dense()) return mul_table[a * q + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_table[a] + log_table[b];
    return exp_table[e];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_table[b]); }
};

}  // namespace detail

class GF;

/// Element of a finite field F_{p^k}; carries a pointer to its field's tables.
class GFElem {
 public:
  GFElem() = default;
  GFElem(const detail::GFData* field, std::uint32_t code) : f_(field), v_(code) {}

  std::uint32_t code() const { return v_; }
  const detail::GFData* data() const { return f_; }
  GF field() const;

  bool is_zero() const { return v_ == 0; }
  std::vector<std::uint32_t> coeffs() const;
  GFElem inv() const;
  GFElem pow(std::uint64_t e) const;
  /// x -> x^p.
  GFElem frobenius() const;
  /// "[c0,c1,...]@p^k".
  std::string to_string() const;

  GFElem operator-() const;
  friend GFElem operator+(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a, const GFElem& b);
  friend GFElem operator*(const GFElem& a, const GFElem& b);
  friend GFElem operator/(const GFElem& a, const GFElem& b);
  GFElem& operator+=(const GFElem& o) { return *this = *this + o; }
  GFElem& operator-=(const GFElem& o) { return *this = *this - o; }
  GFElem& operator*=(const GFElem& o) { return *this = *this * o; }
  GFElem& operator/=(const GFElem& o) { return *this = *this / o; }
  friend bool operator==(const GFElem& a, const GFElem& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator<(const GFElem& a, const GFElem& b) { return a.v_ < b.v_; }

 private:
  const detail::GFData* f_ = nullptr;
  std::uint32_t v_ = 0;
};

/// Descriptor of F_{p^k}. One defining polynomial per (p, k): the
/// lexicographically smallest monic irreducible, so codes are reproducible.
class GF {
 public:
  using Elem = GFElem;

  GF() = default;
  static GF get(std::uint32_t p, std::uint32_t k);
  static GF prime(std::uint32_t p) { return get(p, 1); }
  /// Parses "F_p", "F_p^k" or "GF(p^k)".
  static GF parse(std::string_view name);

  std::uint32_t p() const { return d_->p; }
  std::uint32_t k() const { return d_->k; }
  std::uint32_t q() const { return d_->q; }
  unsigned long characteristic() const { return d_->p; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  const detail::GFData* data() const { return d_; }
  std::string name() const;

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const { return Elem(d_, 1); }
  Elem from_int(long n) const;
  Elem element(std::uint32_t code) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  /// Class of x; a primitive element for k = 1 is returned by primitive().
  Elem generator() const;
  Elem primitive() const;
  /// Parses "[c0,c1,...]@p^k" (must name this field).
  Elem parse_elem(std::string_view text) const;

  std::vector<Elem> elements() const;

  friend bool operator==(const GF& a, const GF& b) { return a.d_ == b.d_; }

 private:
  explicit GF(const detail::GFData* d) : d_(d) {}
  const detail::GFData* d_ = nullptr;
  friend class GFElem;
};

bool is_prime(std::uint64_t n);

/// Monic irreducible of degree k over F_p, lexicographically smallest when
/// coefficients are compared from the x^{k-1} term down. Low-to-high order.
std::vector<std::uint32_t> find_irreducible_coeffs(std::uint32_t p, std::uint32_t k);

/// Image of x under the canonical embedding F_{p^a} -> F_{p^b} (a | b) that
/// sends the generator to the smallest-code root of its defining polynomial.
GFElem embed(const GFElem& x, const GF& target);

}  // namespace pezzo
