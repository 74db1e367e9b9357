#include <random>

#include "doctest.h"
#include "pezzo/brauer/hilbert_oracle.hpp"
#include "pezzo/error.hpp"

using namespace pezzo;
using namespace pezzo::brauer;

namespace {

InvariantVector iv(const std::string& json) { return InvariantVector::parse_json(json); }

const Place kReal = Place::real();
Place P(long p) { return Place::prime(p); }

InvariantVector u713() { return order3_class({{P(7), Fraction1(1, 3)}, {P(13), Fraction1(2, 3)}}); }

}  // namespace

TEST_CASE("hilbert_symbol examples") {
  CHECK(hilbert_symbol(-1, -1, kReal) == -1);
  CHECK(hilbert_symbol(-1, -1, P(2)) == -1);
  CHECK(hilbert_symbol(5, 7, P(3)) == 1);
  CHECK(hilbert_symbol(Rational(1, 2), Rational(3), P(3)) == hilbert_symbol(2, 3, P(3)));
}

TEST_CASE("hilbert_symbol (-1,-1) at 2 by exhaustive search mod 8") {
  // z^2 + x^2 + y^2 = 0 mod 8 with a unit coordinate has no solution.
  int solutions = 0;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z)
        if ((x % 2 || y % 2 || z % 2) && (x * x + y * y + z * z) % 8 == 0) ++solutions;
  CHECK(solutions == 0);
}

TEST_CASE("hilbert_symbol agrees with brute-force solvability") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    for (long a = -10; a <= 10; ++a) {
      for (long b = -10; b <= 10; ++b) {
        if (a == 0 || b == 0) continue;
        CHECK(hilbert_symbol(a, b, P(p)) == hilbert_symbol_bruteforce(a, b, P(p)));
      }
    }
  }
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      if (a != 0 && b != 0) CHECK(hilbert_symbol(a, b, kReal) == hilbert_symbol_bruteforce(a, b, kReal));
    }
  }
}

TEST_CASE("quaternion_class") {
  CHECK(quaternion_class(-1, -1) == iv(R"({"inf":"1/2","primes":{"2":"1/2"}})"));
  CHECK(quaternion_class(1, 7).is_split());
  CHECK(tensor(quaternion_class(-1, -1), quaternion_class(-1, -1)).is_split());
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    long a = static_cast<long>(rng() % 101) - 50, b = static_cast<long>(rng() % 101) - 50;
    if (a == 0 || b == 0) continue;
    InvariantVector q = quaternion_class(a, b);  // constructor enforces reciprocity
    Fraction1 sum;
    for (const auto& [v, x] : q.entries()) sum = sum + x;
    CHECK(sum.is_zero());
    CHECK(q.order() <= 2);
  }
}

TEST_CASE("order3_class validation") {
  CHECK(u713().order() == 3);
  CHECK(order3_class({}).is_split());
  CHECK_THROWS_AS(order3_class({{P(7), Fraction1(1, 3)}}), DomainError);
  try {
    order3_class({{P(7), Fraction1(1, 3)}});
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::ReciprocityViolation);
  }
  try {
    order3_class({{kReal, Fraction1(1, 2)}, {P(2), Fraction1(1, 2)}});
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::RealPlaceOrder);
  }
}

TEST_CASE("group law, index, chatelet kernel, degree-6 decomposition") {
  InvariantVector a6 = iv(R"({"primes":{"7":"1/6","13":"5/6"}})");
  CHECK(tensor(a6, inverse(a6)).is_split());
  CHECK(tensor(a6, a6) == u713());
  CHECK(tensor(quaternion_class(-1, -1), u713()) ==
        iv(R"({"inf":"1/2","primes":{"2":"1/2","7":"1/3","13":"2/3"}})"));
  CHECK(index(InvariantVector()) == 1);
  CHECK(index(quaternion_class(-1, -1)) == 2);
  CHECK(index(a6) == 6);

  CHECK(chatelet_kernel(InvariantVector()).size() == 1);
  auto q = quaternion_class(-1, -1);
  CHECK(chatelet_kernel(q) == std::vector<InvariantVector>{InvariantVector(), q});
  auto u = u713();
  CHECK(chatelet_kernel(u) == std::vector<InvariantVector>{InvariantVector(), u, tensor(u, u)});

  auto parts = decompose_degree6(a6);
  CHECK(parts.c == iv(R"({"primes":{"7":"1/2","13":"1/2"}})"));
  CHECK(parts.d == iv(R"({"primes":{"7":"2/3","13":"1/3"}})"));
  CHECK(tensor(parts.c, parts.d) == a6);
  CHECK(decompose_degree6(q).c == q);
  CHECK(decompose_degree6(q).d.is_split());
  CHECK(decompose_degree6(InvariantVector()).c.is_split());
  InvariantVector a4 = iv(R"({"primes":{"7":"1/4","13":"3/4"}})");
  CHECK_THROWS_AS(decompose_degree6(a4), DomainError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto x = random_class(rng, 6, {2, 3, 5, 7}, true);
    auto d = decompose_degree6(x);
    CHECK(tensor(d.c, d.d) == x);
    CHECK(2 % d.c.order() == 0);
    CHECK(3 % d.d.order() == 0);
  }
}

TEST_CASE("splitting_in_quadratic") {
  auto k = QuadField::of(-1);
  CHECK(splitting_in_quadratic(k, P(5)) == Decomposition::Split);
  CHECK(splitting_in_quadratic(k, P(2)) == Decomposition::Ramified);
  CHECK(splitting_in_quadratic(k, P(3)) == Decomposition::Inert);
  CHECK(splitting_in_quadratic(k, kReal) == Decomposition::Inert);
  auto k2 = QuadField::of(2);
  // 3^2 = 9 = 2 mod 7; the squares mod 13 are {1,3,4,9,10,12}.
  CHECK(splitting_in_quadratic(k2, P(7)) == Decomposition::Split);
  CHECK(splitting_in_quadratic(k2, P(13)) == Decomposition::Inert);
  CHECK(splitting_in_quadratic(QuadField::of(-3), P(2)) == Decomposition::Inert);
  CHECK(splitting_in_quadratic(QuadField::of(-7), P(2)) == Decomposition::Split);
  CHECK_THROWS_AS(QuadField::of(8), DomainError);
  // Oracle: p splits iff x^2 = d has a nonzero solution mod p (p odd, p not dividing d).
  for (long d : {-1L, 2L, -3L, 5L, 13L, -11L}) {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      if (d % p == 0) continue;
      bool square = false;
      for (long x = 1; x < p; ++x) square = square || ((x * x - d) % p + p) % p == 0;
      CHECK((splitting_in_quadratic(QuadField::of(d), P(p)) == Decomposition::Split) == square);
    }
  }
}

TEST_CASE("restriction and corestriction") {
  auto ki = QuadField::of(-1);
  CHECK(restriction(quaternion_class(-1, -1), ki).is_split());
  CHECK(restriction(InvariantVector(), ki).is_split());
  auto k2 = QuadField::of(2);
  auto r = restriction(u713(), k2);
  CHECK(r.at(P(7), 0) == Fraction1(1, 3));
  CHECK(r.at(P(7), 1) == Fraction1(1, 3));
  CHECK(r.at(P(13), 0) == Fraction1(1, 3));
  CHECK(r.entries().size() == 3);
  CHECK(corestriction(r) == iv(R"({"primes":{"7":"2/3","13":"1/3"}})"));
  CHECK(corestriction(r) == tensor(u713(), u713()));
  CHECK(corestriction(InvariantVectorK(k2)).is_split());
  CHECK(corestriction(restriction(quaternion_class(-1, -1), ki)).is_split());

  CHECK(admits_unitary_involution(InvariantVectorK(k2)));
  CHECK(!admits_unitary_involution(restriction(u713(), k2)));
  CHECK(admits_unitary_involution(restriction(quaternion_class(-1, -1), k2)));
  InvariantVectorK cancel(k2, {{P(7), 0, Fraction1(1, 3)}, {P(7), 1, Fraction1(2, 3)}});
  CHECK(admits_unitary_involution(cancel));
  CHECK_THROWS_AS(InvariantVectorK(k2, {{P(13), 1, Fraction1(1, 3)}, {P(13), 0, Fraction1(2, 3)}}), DomainError);

  std::mt19937_64 rng(99);
  for (long d : {-1L, 2L, -3L, 5L}) {
    auto k = QuadField::of(d);
    for (int i = 0; i < 200; ++i) {
      auto u = random_class(rng, 12, {2, 3, 5, 7, 11, 13}, true);
      CHECK(corestriction(restriction(u, k)) == multiple(2, u));
    }
  }
  auto ks = QuadField::split();
  CHECK(corestriction(restriction(u713(), ks)) == multiple(2, u713()));
}

TEST_CASE("JSON formats") {
  auto a6 = iv(R"({"inf":"0","primes":{"7":"1/6","13":"5/6"}})");
  CHECK(a6.to_json().dump() == R"({"inf":"0","primes":{"13":"5/6","7":"1/6"}})");
  CHECK(InvariantVector::parse_json(a6.to_json()) == a6);
  auto r = restriction(u713(), QuadField::of(2));
  CHECK(r.to_json().dump() == R"({"K":"2","inf":["0","0"],"primes":{"13":["1/3"],"7":["1/3","1/3"]}})");
  CHECK(InvariantVectorK::parse_json(r.to_json()) == r);
  CHECK_THROWS_AS(iv(R"({"primes":{"7":"1/6"}})"), DomainError);
  CHECK_THROWS_AS(iv(R"({"primes":{"8":"1/2","7":"1/2"}})"), DomainError);
  CHECK_THROWS_AS(iv(R"({"inf":"1/3","primes":{"7":"2/3"}})"), DomainError);
  CHECK_THROWS_AS(iv("not json"), DomainError);
}
