#include "pezzo/proof/kernel.hpp"

#include <algorithm>

#include "pezzo/error.hpp"

namespace pezzo::proof {

using brauer::InvariantVector;

const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::SeveriBrauerSurface: return "severi_brauer_surface";
    case CaseKind::FormP1xP1: return "form_of_p1xp1";
    case CaseKind::ConicBundle: return "conic_bundle";
    case CaseKind::DelPezzoRankOne: return "del_pezzo_rank_one";
  }
  return "?";
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Zero: return "0";
    case Shape::Z2: return "Z/2";
    case Shape::Z2xZ2: return "Z/2+Z/2";
    case Shape::Z3: return "Z/3";
  }
  return "?";
}

const char* generator_type_name(GeneratorType t) {
  switch (t) {
    case GeneratorType::Quaternion: return "quaternion";
    case GeneratorType::Biquaternion: return "biquaternion";
    case GeneratorType::Cubic: return "cubic";
  }
  return "?";
}

SurfaceCase SurfaceCase::severi_brauer(InvariantVector a) {
  SurfaceCase c;
  c.kind = CaseKind::SeveriBrauerSurface;
  c.cls = std::move(a);
  return c;
}

SurfaceCase SurfaceCase::form_p1xp1(brauer::InvariantVectorK conic) {
  SurfaceCase c;
  c.kind = CaseKind::FormP1xP1;
  c.k = conic.field();
  c.conic_k = std::move(conic);
  return c;
}

SurfaceCase SurfaceCase::form_p1xp1_split(InvariantVector q1, InvariantVector q2) {
  SurfaceCase c;
  c.kind = CaseKind::FormP1xP1;
  c.cls = std::move(q1);
  c.second = std::move(q2);
  return c;
}

SurfaceCase SurfaceCase::conic_bundle(InvariantVector q) {
  SurfaceCase c;
  c.kind = CaseKind::ConicBundle;
  c.cls = std::move(q);
  return c;
}

SurfaceCase SurfaceCase::del_pezzo_rank_one() { return SurfaceCase{}; }

nlohmann::json SurfaceCase::to_json() const {
  nlohmann::json j{{"case", case_name(kind)}};
  switch (kind) {
    case CaseKind::SeveriBrauerSurface: j["class"] = cls.to_json(); break;
    case CaseKind::ConicBundle: j["conic"] = cls.to_json(); break;
    case CaseKind::FormP1xP1:
      j["K"] = k.to_string();
      if (conic_k) {
        j["conic"] = conic_k->to_json();
      } else {
        j["conics"] = {cls.to_json(), second.to_json()};
      }
      break;
    case CaseKind::DelPezzoRankOne: break;
  }
  return j;
}

nlohmann::json KernelShape::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) gens.push_back({{"class", g.cls.to_json()}, {"type", generator_type_name(g.type)}});
  return {{"shape", shape_name(shape)}, {"generators", gens}, {"determined", determined}, {"axiom", axiom}};
}

bool KernelShape::well_formed() const {
  long want = shape == Shape::Z3 ? 3 : 2;
  std::size_t count = shape == Shape::Zero ? 0 : shape == Shape::Z2xZ2 ? 2 : 1;
  if (generators.size() > count || (determined && generators.size() != count)) return false;
  for (const auto& g : generators) {
    if (g.cls.order() != want) return false;
  }
  if (generators.size() == 2 && tensor(generators[0].cls, generators[1].cls).is_split()) return false;
  return true;
}

bool in_master_list(const KernelShape& s) {
  return s.shape == Shape::Zero || s.shape == Shape::Z2 || s.shape == Shape::Z2xZ2 || s.shape == Shape::Z3;
}

bool types_match_case(const SurfaceCase& c, const KernelShape& s) {
  for (const auto& g : s.generators) {
    switch (c.kind) {
      case CaseKind::SeveriBrauerSurface:
        if (g.type != GeneratorType::Cubic) return false;
        break;
      case CaseKind::FormP1xP1:
        if (g.type == GeneratorType::Cubic) return false;
        break;
      case CaseKind::ConicBundle:
        if (g.type != GeneratorType::Quaternion) return false;
        break;
      case CaseKind::DelPezzoRankOne: return false;
    }
  }
  return true;
}

namespace {

GeneratorType two_torsion_type(const InvariantVector& u) {
  return brauer::index(u) <= 2 ? GeneratorType::Quaternion : GeneratorType::Biquaternion;
}

void require_order(const InvariantVector& u, long divides, const char* what) {
  if (divides % u.order() != 0) {
    throw DomainError(ErrorCode::MalformedCase, std::string(what) + " has order " + std::to_string(u.order()));
  }
}

}  // namespace

std::vector<KernelShape> kernel_shapes(const SurfaceCase& c) {
  switch (c.kind) {
    case CaseKind::SeveriBrauerSurface: {
      require_order(c.cls, 3, "Severi-Brauer surface class");
      auto ker = brauer::chatelet_kernel(c.cls);
      if (ker.size() == 1) return {KernelShape{Shape::Zero, {}, true, false}};
      return {KernelShape{Shape::Z3, {{c.cls, GeneratorType::Cubic}}, true, false}};
    }
    case CaseKind::FormP1xP1: {
      if (c.conic_k) {
        if (c.conic_k->field().is_split()) {
          throw DomainError(ErrorCode::MalformedCase, "use form_p1xp1_split for split K");
        }
        auto ck = *c.conic_k;
        if (ck.is_split()) return {KernelShape{Shape::Zero, {}, true, false}};
        for (const auto& [slot, inv] : ck.entries()) {
          if (inv.order() > 2) throw DomainError(ErrorCode::MalformedCase, "conic class over K has order > 2");
        }
        InvariantVector cor = brauer::corestriction(ck);
        if (cor.is_split()) return {KernelShape{Shape::Zero, {}, true, false}};
        return {KernelShape{Shape::Z2, {{cor, two_torsion_type(cor)}}, true, false}};
      }
      require_order(c.cls, 2, "conic class");
      require_order(c.second, 2, "conic class");
      std::vector<InvariantVector> nonzero;
      for (const auto& u : {c.cls, c.second}) {
        if (!u.is_split() && std::find(nonzero.begin(), nonzero.end(), u) == nonzero.end()) nonzero.push_back(u);
      }
      if (nonzero.empty()) return {KernelShape{Shape::Zero, {}, true, false}};
      if (nonzero.size() == 1) return {KernelShape{Shape::Z2, {{nonzero[0], two_torsion_type(nonzero[0])}}, true, false}};
      return {KernelShape{Shape::Z2xZ2,
                          {{nonzero[0], two_torsion_type(nonzero[0])}, {nonzero[1], two_torsion_type(nonzero[1])}},
                          true,
                          false}};
    }
    case CaseKind::ConicBundle: {
      require_order(c.cls, 2, "base conic class");
      // The second generator comes from index reduction and is not fixed by the data.
      if (c.cls.is_split()) {
        return {KernelShape{Shape::Zero, {}, true, true}, KernelShape{Shape::Z2, {}, false, true}};
      }
      Generator q{c.cls, GeneratorType::Quaternion};
      return {KernelShape{Shape::Z2, {q}, true, true}, KernelShape{Shape::Z2xZ2, {q}, false, true}};
    }
    case CaseKind::DelPezzoRankOne: return {KernelShape{Shape::Zero, {}, true, true}};
  }
  throw DomainError(ErrorCode::MalformedCase, "unknown case");
}

SurfaceCase random_case(std::mt19937_64& rng) {
  static const std::vector<long> primes{3, 5, 7, 11, 13};
  static const std::vector<long> discs{-1, 2, -3, 5, -7, 13};
  auto pick_primes = [&] {
    std::vector<long> ps;
    for (long p : primes)
      if (rng() % 2) ps.push_back(p);
    if (ps.size() < 2) ps = {primes[rng() % 2], primes[2 + rng() % 3]};
    return ps;
  };
  switch (rng() % 5) {
    case 0: return SurfaceCase::severi_brauer(brauer::random_class(rng, 3, pick_primes(), false));
    case 1: {
      auto k = brauer::QuadField::of(discs[rng() % discs.size()]);
      return SurfaceCase::form_p1xp1(brauer::restriction(brauer::random_class(rng, 2, pick_primes(), true), k));
    }
    case 2: {
      auto q1 = brauer::random_class(rng, 2, pick_primes(), true);
      auto q2 = brauer::random_class(rng, 2, pick_primes(), true);
      return SurfaceCase::form_p1xp1_split(q1, q2);
    }
    case 3: return SurfaceCase::conic_bundle(brauer::random_class(rng, 2, pick_primes(), true));
    default: return SurfaceCase::del_pezzo_rank_one();
  }
}

nlohmann::json Compatibility::to_json() const {
  nlohmann::json j{{"compatible", compatible}, {"reason", reason}};
  if (witness) j["witness"] = witness->to_json();
  return j;
}

Compatibility corollary_3or4_check(const InvariantVector& a, const InvariantVector& b) {
  long ia = brauer::index(a), ib = brauer::index(b);
  if (3 % ia == 0 && 3 % ib == 0) return {true, "both cubic", std::nullopt};
  if (a.order() <= 2 && b.order() <= 2 && ia <= 4 && ib <= 4) return {true, "both quaternion or biquaternion", std::nullopt};
  Compatibility c{false, "indices " + std::to_string(ia) + " and " + std::to_string(ib) + " mix types", std::nullopt};
  auto t = tensor(a, b);
  if (t.order() == 6) c.witness = t;
  return c;
}

}  // namespace pezzo::proof
