#include <random>

#include "doctest.h"
#include "pezzo/fields/matrix.hpp"
#include "pezzo/fields/poly.hpp"
#include "pezzo/fields/quad_ext.hpp"

using namespace pezzo;

namespace {

// Exhaustive irreducibility oracle: no monic factor of degree 1..k/2 over F_p.
bool brute_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  GF fp = GF::prime(p);
  std::vector<GFElem> fc;
  for (auto c : f) fc.push_back(fp.element(c));
  Poly<GF> poly(fp, fc);
  const int k = poly.degree();
  for (int d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<GFElem> dc;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        dc.push_back(fp.element(static_cast<std::uint32_t>(c % p)));
        c /= p;
      }
      dc.push_back(fp.one());
      if (poly.divmod(Poly<GF>(fp, dc)).second.is_zero()) return false;
    }
  }
  return true;
}

template <class F, class Gen>
void check_field_axioms(const F& field, Gen&& random_elem, std::mt19937_64& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == field.zero());
    if (!a.is_zero()) CHECK(a * (field.one() / a) == field.one());
  }
}

}  // namespace

TEST_CASE("field_arith examples") {
  CHECK(Rational(1).inv() == Rational(1));
  GF f7 = GF::prime(7);
  CHECK(f7.from_int(3).inv() == f7.from_int(5));
  // Brute-force oracle for the inverse of 3 mod 7.
  for (long x = 0; x < 7; ++x) {
    if ((3 * x) % 7 == 1) CHECK(f7.from_int(3).inv() == f7.from_int(x));
  }
  CHECK(Rational::parse("2/3") + Rational::parse("1/6") == Rational::parse("5/6"));
  CHECK((Rational::parse("2/3") + Rational::parse("1/6")).to_string() == "5/6");
}

TEST_CASE("field_arith errors") {
  CHECK_THROWS_AS(Rational(0).inv(), DomainError);
  CHECK_THROWS_AS(GF::prime(5).zero().inv(), DomainError);
  try {
    (void)(GF::prime(5).one() + GF::prime(7).one());
    FAIL("expected FieldMismatch");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK_THROWS_AS(GF::get(4, 1), DomainError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  RationalField qq;
  check_field_axioms(qq, [](std::mt19937_64& r) {
    return Rational(static_cast<long>(r() % 41) - 20, static_cast<long>(r() % 9) + 1);
  }, rng);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 6}, {5, 2}, {3, 6}}) {
    GF f = GF::get(p, k);
    check_field_axioms(f, [&](std::mt19937_64& r) { return f.element(static_cast<std::uint32_t>(r() % f.q())); }, rng);
  }
  QuadExt<GF> k9(GF::prime(3), GF::prime(3).zero(), GF::prime(3).from_int(2));
  check_field_axioms(k9, [&](std::mt19937_64& r) {
    return k9.make(GF::prime(3).from_int(static_cast<long>(r() % 3)), GF::prime(3).from_int(static_cast<long>(r() % 3)));
  }, rng);
}

TEST_CASE("find_irreducible examples") {
  CHECK(find_irreducible_coeffs(2, 1) == std::vector<std::uint32_t>{0, 1});
  CHECK(find_irreducible_coeffs(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(find_irreducible_coeffs(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(find_irreducible(3, 2).degree() == 2);
}

TEST_CASE("find_irreducible matches exhaustive oracle for p*k <= 16") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t k = 1; p * k <= 16; ++k) {
      auto f = find_irreducible_coeffs(p, k);
      CHECK(f.size() == k + 1);
      CHECK(f.back() == 1);
      CHECK(brute_irreducible(f, p));
      // Every lexicographically smaller monic polynomial is reducible.
      std::uint64_t code = 0;
      for (std::size_t i = k; i-- > 0;) code = code * p + f[i];
      for (std::uint64_t c = 0; c < code; ++c) {
        std::vector<std::uint32_t> g;
        std::uint64_t t = c;
        for (std::uint32_t i = 0; i < k; ++i) {
          g.push_back(static_cast<std::uint32_t>(t % p));
          t /= p;
        }
        g.push_back(1);
        CHECK_FALSE(brute_irreducible(g, p));
      }
    }
  }
}

TEST_CASE("frobenius") {
  GF f4 = GF::get(2, 2);
  auto t = f4.generator();
  CHECK(t.frobenius() == t + f4.one());
  for (const auto& x : f4.elements()) CHECK(x.frobenius().frobenius() == x);
  GF f7 = GF::prime(7);
  for (const auto& x : f7.elements()) CHECK(x.frobenius() == x);

  std::mt19937_64 rng(5);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 6}}) {
    GF f = GF::get(p, k);
    for (int i = 0; i < 200; ++i) {
      auto a = f.element(static_cast<std::uint32_t>(rng() % f.q()));
      auto b = f.element(static_cast<std::uint32_t>(rng() % f.q()));
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
    std::size_t fixed = 0;
    for (const auto& x : f.elements()) {
      auto y = x;
      for (int i = 0; i < k; ++i) y = y.frobenius();
      CHECK(y == x);
      if (x.frobenius() == x) ++fixed;
    }
    CHECK(fixed == static_cast<std::size_t>(p));
  }
}

TEST_CASE("serialization") {
  GF f4 = GF::get(2, 2);
  CHECK(f4.generator().to_string() == "[0,1]@2^2");
  CHECK(f4.parse_elem("[1,1]@2^2") == f4.generator() + f4.one());
  CHECK(Rational::parse("-4/6").to_string() == "-2/3");
  CHECK_THROWS_AS(f4.parse_elem("[1]@3^1"), DomainError);
}

TEST_CASE("embedding is a ring homomorphism") {
  GF f4 = GF::get(2, 2), f64 = GF::get(2, 6);
  for (const auto& a : f4.elements()) {
    for (const auto& b : f4.elements()) {
      CHECK(embed(a * b, f64) == embed(a, f64) * embed(b, f64));
      CHECK(embed(a + b, f64) == embed(a, f64) + embed(b, f64));
    }
  }
  CHECK_THROWS_AS(embed(f4.one(), GF::get(2, 3)), DomainError);
}

TEST_CASE("polynomial utilities") {
  RationalField qq;
  auto f = Poly<RationalField>::from_ints(qq, {-6, 11, -6, 1});
  auto r = roots(f);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Rational(1));
  CHECK(r[2] == Rational(3));
  CHECK(is_squarefree(f));
  CHECK_FALSE(is_squarefree(Poly<RationalField>::from_ints(qq, {1, 2, 1})));

  GF f2 = GF::prime(2);
  CHECK(factor_degrees(Poly<GF>::from_ints(f2, {1, 1, 0, 1})) == std::vector<int>{3});
  CHECK(factor_degrees(Poly<GF>::from_ints(f2, {0, 1, 1, 1})) == std::vector<int>{1, 2});
  GF f3 = GF::prime(3);
  CHECK(factor_degrees(Poly<GF>::from_ints(f3, {0, 2, 0, 1})) == std::vector<int>{1, 1, 1});
}

TEST_CASE("linear algebra over fields") {
  RationalField qq;
  Matrix<RationalField> m(qq, 2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(rank(m) == 1);
  auto ns = nullspace(m);
  CHECK(ns.cols() == 2);
  CHECK((m * ns).is_zero());
  Matrix<RationalField> a(qq, 2, 2, {2, 1, 1, 1});
  CHECK(determinant(a) == Rational(1));
  CHECK(a * inverse(a) == Matrix<RationalField>::identity(qq, 2));
}
