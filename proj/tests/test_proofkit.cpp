#include <random>

#include "doctest.h"
#include "pezzo/error.hpp"
#include "pezzo/proof/certificate.hpp"
#include "pezzo/proof/kernel.hpp"

using namespace pezzo;
using namespace pezzo::proof;
using brauer::InvariantVector;

namespace {

InvariantVector iv(const char* text) { return InvariantVector::parse_json(std::string(text)); }

std::size_t count_kind(const ProofCertificate& c, StepKind k) {
  std::size_t n = 0;
  for (const auto& s : c.steps) n += s.kind == k;
  return n;
}

}  // namespace

TEST_CASE("kernel shapes: examples") {
  auto sb = kernel_shapes(SurfaceCase::severi_brauer(iv(R"({"primes":{"7":"1/3","13":"2/3"}})")));
  REQUIRE(sb.size() == 1);
  CHECK(sb[0].shape == Shape::Z3);
  CHECK(sb[0].generators[0].cls == iv(R"({"primes":{"7":"1/3","13":"2/3"}})"));
  CHECK(sb[0].generators[0].type == GeneratorType::Cubic);

  auto q = brauer::quaternion_class(Rational(-1), Rational(-1));
  auto f = kernel_shapes(SurfaceCase::form_p1xp1(brauer::restriction(q, brauer::QuadField::of(-1))));
  REQUIRE(f.size() == 1);
  CHECK(f[0].shape == Shape::Zero);

  // Over Q(sqrt 2) the class (-1,-1) stays nonzero but cor(res) = 2u = 0.
  auto f2 = kernel_shapes(SurfaceCase::form_p1xp1(brauer::restriction(q, brauer::QuadField::of(2))));
  CHECK(f2[0].shape == Shape::Zero);

  auto dp = kernel_shapes(SurfaceCase::del_pezzo_rank_one());
  REQUIRE(dp.size() == 1);
  CHECK(dp[0].shape == Shape::Zero);
  CHECK(dp[0].axiom);

  auto split = kernel_shapes(SurfaceCase::form_p1xp1_split(q, brauer::quaternion_class(Rational(3), Rational(-1))));
  CHECK(split[0].shape == Shape::Z2xZ2);
  auto same = kernel_shapes(SurfaceCase::form_p1xp1_split(q, q));
  CHECK(same[0].shape == Shape::Z2);

  CHECK_THROWS_AS(kernel_shapes(SurfaceCase::severi_brauer(q)), DomainError);
  CHECK_THROWS_AS(kernel_shapes(SurfaceCase::conic_bundle(iv(R"({"primes":{"7":"1/3","13":"2/3"}})"))), DomainError);
}

TEST_CASE("kernel shapes: cor of a non-restricted conic over K") {
  // A class over K = Q(i) with invariant 1/2 at one slot above the split prime 5
  // and 1/2 at the inert prime 3 corestricts to {3:1/2, 5:1/2}.
  auto k = brauer::QuadField::of(-1);
  brauer::InvariantVectorK c(k, {{brauer::Place::prime(3), 0, brauer::Fraction1(1, 2)},
                                 {brauer::Place::prime(5), 0, brauer::Fraction1(1, 2)}});
  auto s = kernel_shapes(SurfaceCase::form_p1xp1(c));
  REQUIRE(s.size() == 1);
  CHECK(s[0].shape == Shape::Z2);
  CHECK(s[0].generators[0].cls == iv(R"({"primes":{"3":"1/2","5":"1/2"}})"));
  CHECK(s[0].generators[0].type == GeneratorType::Quaternion);
}

TEST_CASE("kernel shapes: 100 random cases stay in the master list") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    auto c = random_case(rng);
    CAPTURE(c.to_json().dump());
    for (const auto& s : kernel_shapes(c)) {
      CHECK(in_master_list(s));
      CHECK(s.well_formed());
      CHECK(types_match_case(c, s));
    }
  }
}

TEST_CASE("corollary_3or4") {
  auto q = brauer::quaternion_class(Rational(-1), Rational(-1));
  auto cubic = iv(R"({"primes":{"7":"1/3","13":"2/3"}})");
  auto r = corollary_3or4_check(q, cubic);
  CHECK(!r.compatible);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->order() == 6);
  CHECK(corollary_3or4_check(cubic, cubic).compatible);
  CHECK(corollary_3or4_check(InvariantVector(), InvariantVector()).compatible);
  CHECK(corollary_3or4_check(q, q).compatible);
}

TEST_CASE("first proof replay") {
  auto a = degree6_witness();
  auto cert = replay_first_proof(a);
  CHECK(cert.contradiction);
  std::size_t corres = 0;
  for (const auto& s : cert.steps) {
    if (s.kind == StepKind::Verified && s.computation == "brauer.corestriction") {
      ++corres;
      CHECK(s.result.at("equals_compare").get<bool>());
    }
    if (s.kind == StepKind::Axiom) CHECK(!std::string(axiom_info(*s.axiom).anchor).empty());
  }
  CHECK(corres == 2);
  CHECK(recheck(cert).ok());
  CHECK(count_kind(cert, StepKind::Axiom) > 0);

  CHECK(replay_first_proof(iv(R"({"primes":{"7":"1/6","11":"1/6","13":"2/3"}})")).contradiction);
  CHECK(replay_first_proof(a, brauer::QuadField::of(-3)).contradiction);
  CHECK_THROWS_AS(replay_first_proof(brauer::quaternion_class(Rational(-1), Rational(-1))), DomainError);
  try {
    replay_first_proof(brauer::quaternion_class(Rational(-1), Rational(-1)));
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::IndexMismatch);
  }
}

TEST_CASE("second proof replay") {
  auto a = degree6_witness();
  auto cert = replay_second_proof(a);
  CHECK(cert.contradiction);
  const auto& last = cert.steps.back();
  CHECK(last.computation == "proof.corollary_3or4");
  CHECK(InvariantVector::parse_json(last.result.at("witness")) == a);
  CHECK(recheck(cert).ok());
  CHECK_THROWS_AS(replay_second_proof(iv(R"({"primes":{"7":"1/3","13":"2/3"}})")), DomainError);
  // quaternion (x) cubic with disjoint supports
  auto mixed = tensor(brauer::quaternion_class(Rational(-1), Rational(3)), iv(R"({"primes":{"7":"1/3","13":"2/3"}})"));
  CHECK(replay_second_proof(mixed).contradiction);
}

TEST_CASE("cdim PGL6 wrapper") {
  auto a = degree6_witness();
  CHECK(brauer::index(a) == 6);
  for (const auto& c : {replay_first_proof(a), replay_second_proof(a)}) {
    auto w = corollary_cdpgl(c);
    CHECK(w.verdict == "cdim PGL_6 = 3");
    CHECK(recheck(w).ok());
  }
  ProofCertificate failed;
  failed.proof = "first";
  CHECK(corollary_cdpgl(failed).verdict.empty());
}

TEST_CASE("index-6 corpus replays and is reproducible") {
  auto corpus = index6_corpus(6, 50);
  CHECK(corpus.size() == 50);
  CHECK(corpus == index6_corpus(6, 50));
  for (const auto& a : corpus) {
    CHECK(brauer::index(a) == 6);
    auto c1 = replay_first_proof(a);
    auto c2 = replay_second_proof(a);
    CHECK(c1.contradiction);
    CHECK(c2.contradiction);
    CHECK(recheck(c1).ok());
    CHECK(recheck(c2).ok());
    CHECK(c1.to_json().dump() == replay_first_proof(a).to_json().dump());
  }
}

TEST_CASE("tampered certificate is caught") {
  auto cert = replay_second_proof(degree6_witness());
  for (auto& s : cert.steps) {
    if (s.computation == "brauer.index") s.result["index"] = 3;
  }
  CHECK(!recheck(cert).ok());
  CHECK_THROWS_AS(run_computation("no.such", {}), DomainError);
  CHECK(cert.transcript().find("[AXIOM") != std::string::npos);
}
