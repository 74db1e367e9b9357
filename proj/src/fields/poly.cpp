#include "pezzo/fields/poly.hpp"

namespace pezzo {

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > Integer("1000000000000")) {
    throw DomainError(ErrorCode::InvalidArgument, "coefficient too large for rational root search");
  }
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

Poly<GF> powmod(Poly<GF> base, std::uint64_t e, const Poly<GF>& m) {
  Poly<GF> result(m.field(), {m.field().one()});
  base = base.divmod(m).second;
  while (e > 0) {
    if (e & 1) result = (result * base).divmod(m).second;
    e >>= 1;
    if (e) base = (base * base).divmod(m).second;
  }
  return result;
}

}  // namespace

std::vector<GFElem> roots(const Poly<GF>& f) {
  if (f.is_zero()) throw DomainError(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  std::vector<GFElem> out;
  for (const auto& x : f.field().elements()) {
    if (f.eval(x).is_zero()) out.push_back(x);
  }
  return out;
}

std::vector<Rational> roots(const Poly<RationalField>& f) {
  if (f.is_zero()) throw DomainError(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  // Clear denominators, strip x^m.
  Integer l = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& c : f.coeffs()) ints.push_back(c.num() * (l / c.den()));
  std::vector<Rational> out;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) out.push_back(Rational(0));
  const auto ps = divisors(ints[low]);
  const auto qs = divisors(ints.back());
  for (const auto& pn : ps) {
    for (const auto& qd : qs) {
      for (int sgn : {1, -1}) {
        Rational cand(Integer(pn * sgn), qd);
        if (f.eval(cand).is_zero() && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly<GF> find_irreducible(std::uint32_t p, std::uint32_t k) {
  GF fp = GF::prime(p);
  std::vector<GFElem> c;
  for (auto v : find_irreducible_coeffs(p, k)) c.push_back(fp.element(v));
  return Poly<GF>(fp, std::move(c));
}

std::vector<int> factor_degrees(const Poly<GF>& f) {
  const GF& field = f.field();
  Poly<GF> rest = f.monic();
  std::vector<int> degs;
  Poly<GF> x(field, {field.zero(), field.one()});
  Poly<GF> h = x;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, field.q(), rest);
    Poly<GF> g = poly_gcd(rest, h - x);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
      rest = rest.divmod(g).first;
      h = h.divmod(rest).second;
    }
  }
  if (rest.degree() > 0) degs.push_back(rest.degree());
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace pezzo
