#include "pezzo/fields/rational.hpp"

#include "pezzo/error.hpp"

namespace pezzo {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError(ErrorCode::ParseError, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw DomainError(ErrorCode::ParseError, "bad integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError(ErrorCode::ParseError, "bad integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::inv() const {
  if (is_zero()) throw DomainError(ErrorCode::DivisionByZero, "inverse of 0 in Q");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "division by 0 in Q");
  v_ /= o.v_;
  return *this;
}

}  // namespace pezzo
