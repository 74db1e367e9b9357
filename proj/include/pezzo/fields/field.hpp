#pragma once

#include <concepts>
#include <string>

#include "pezzo/fields/gf.hpp"
#include "pezzo/fields/rational.hpp"

namespace pezzo {

/// The exact-field contract consumed by the generic linear algebra. Elements
/// support the ring operations; division throws DivisionByZero on zero (and on
/// zero divisors for the split quadratic algebra).
template <class F>
concept ExactField = requires(const F& f, const typename F::Elem& a, long n) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(n) } -> std::same_as<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<unsigned long>;
  { f.name() } -> std::convertible_to<std::string>;
  { a + a } -> std::same_as<typename F::Elem>;
  { a - a } -> std::same_as<typename F::Elem>;
  { a * a } -> std::same_as<typename F::Elem>;
  { a / a } -> std::same_as<typename F::Elem>;
  { -a } -> std::same_as<typename F::Elem>;
  { a == a } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

inline std::string elem_to_string(const Rational& x) { return x.to_string(); }
inline std::string elem_to_string(const GFElem& x) { return x.to_string(); }

}  // namespace pezzo
