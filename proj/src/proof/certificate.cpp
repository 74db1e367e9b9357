#include "pezzo/proof/certificate.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "pezzo/dp6/lemma.hpp"
#include "pezzo/error.hpp"
#include "pezzo/proof/kernel.hpp"

namespace pezzo::proof {

using brauer::InvariantVector;
using brauer::InvariantVectorK;
using nlohmann::json;

AxiomInfo axiom_info(Axiom a) {
  switch (a) {
    case Axiom::Resolution: return {"resolution", "resolution of singularities of surfaces"};
    case Axiom::Castelnuovo: return {"castelnuovo", "Castelnuovo contraction criterion"};
    case Axiom::IskovskikhMori: return {"iskovskikh_mori", "Iskovskikh-Mori classification of minimal rational surfaces"};
    case Axiom::MinimalModelReduction: return {"minimal_model_reduction", "reduction to a minimal surface of index divisible by 6"};
    case Axiom::CanonicalDimension: return {"canonical_dimension", "Karpenko-Merkurjev canonical dimension of splitting varieties"};
    case Axiom::Amitsur: return {"amitsur", "Amitsur/Chatelet: Br(F(SB(A))/F) is generated by [A]"};
    case Axiom::DelPezzoSix: return {"del_pezzo_six", "degree-6 del Pezzo surfaces as S(B,tau,L)"};
    case Axiom::DelPezzoIndex: return {"del_pezzo_index", "index constraints for S(B,tau,L)"};
    case Axiom::UnitaryInvolution: return {"unitary_involution", "unitary involution exists iff cor_{K/F}[B] = 0"};
    case Axiom::UnirationalKernel: return {"unirational_kernel", "Brauer kernels of geometrically unirational varieties of cdim <= 2"};
    case Axiom::TorsorCorrespondence: return {"torsor_correspondence", "PGL_n-torsors and central simple algebras of degree n"};
  }
  return {"?", "?"};
}

json Step::to_json() const {
  if (kind == StepKind::Verified) {
    return {{"kind", "VERIFIED"}, {"statement", statement}, {"computation", computation}, {"args", args}, {"result", result}};
  }
  AxiomInfo info = axiom_info(*axiom);
  return {{"kind", "AXIOM"}, {"statement", statement}, {"axiom", info.id}, {"anchor", info.anchor}};
}

json ProofCertificate::to_json() const {
  json st = json::array();
  for (const auto& s : steps) st.push_back(s.to_json());
  json j{{"proof", proof}, {"input", input}, {"steps", st}, {"contradiction", contradiction}, {"verdict", verdict}};
  if (inner) j["inner"] = inner->to_json();
  return j;
}

std::string ProofCertificate::transcript() const {
  std::ostringstream out;
  if (inner) out << inner->transcript();
  out << "== " << proof << " on " << input.dump() << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    out << i + 1 << ". ";
    if (s.kind == StepKind::Verified) {
      out << "[VERIFIED " << s.computation << "] " << s.statement << " => " << s.result.dump() << "\n";
    } else {
      out << "[AXIOM " << axiom_info(*s.axiom).anchor << "] " << s.statement << "\n";
    }
  }
  out << "verdict: " << (verdict.empty() ? "none" : verdict) << "\n";
  return out.str();
}

namespace {

InvariantVector cls(const json& j) { return InvariantVector::parse_json(j); }

const std::map<std::string, std::function<json(const json&)>>& registry() {
  static const std::map<std::string, std::function<json(const json&)>> r{
      {"brauer.index", [](const json& a) { return json{{"index", brauer::index(cls(a.at("u")))}}; }},
      {"brauer.order", [](const json& a) { return json{{"order", cls(a.at("u")).order()}}; }},
      {"brauer.decompose_degree6",
       [](const json& a) {
         auto parts = brauer::decompose_degree6(cls(a.at("u")));
         return json{{"C", parts.c.to_json()},
                     {"C_order", parts.c.order()},
                     {"D", parts.d.to_json()},
                     {"D_order", parts.d.order()}};
       }},
      {"brauer.tensor",
       [](const json& a) {
         auto t = tensor(cls(a.at("u")), cls(a.at("v")));
         return json{{"class", t.to_json()}, {"order", t.order()}};
       }},
      {"brauer.multiple",
       [](const json& a) { return json{{"class", multiple(a.at("n").get<long>(), cls(a.at("u"))).to_json()}}; }},
      {"brauer.restriction",
       [](const json& a) {
         auto r = brauer::restriction(cls(a.at("u")), brauer::QuadField::parse(a.at("K").get<std::string>()));
         return json{{"class", r.to_json()}, {"split", r.is_split()}};
       }},
      {"brauer.corestriction",
       [](const json& a) {
         auto c = brauer::corestriction(InvariantVectorK::parse_json(a.at("u")));
         json j{{"class", c.to_json()}};
         if (a.contains("compare")) j["equals_compare"] = c == cls(a.at("compare"));
         return j;
       }},
      {"brauer.admits_unitary_involution",
       [](const json& a) {
         return json{{"admits", brauer::admits_unitary_involution(InvariantVectorK::parse_json(a.at("u")))}};
       }},
      {"brauer.chatelet_kernel",
       [](const json& a) {
         auto u = cls(a.at("u"));
         auto ker = brauer::chatelet_kernel(u);
         json list = json::array();
         for (const auto& x : ker) list.push_back(x.to_json());
         return json{{"kernel", list}, {"contains_u", std::find(ker.begin(), ker.end(), u) != ker.end()}};
       }},
      {"dp6.lemma_number_check",
       [](const json& a) {
         dp6::Observation obs;
         obs.index = a.at("index").get<int>();
         return dp6::lemma_number_check(a.at("center_split").get<bool>(), a.at("algebra_split").get<bool>(), obs)
             .to_json();
       }},
      {"proof.corollary_3or4",
       [](const json& a) { return corollary_3or4_check(cls(a.at("a")), cls(a.at("b"))).to_json(); }},
      {"arith.divisors_divisible_by",
       [](const json& a) {
         long n = a.at("n").get<long>(), m = a.at("m").get<long>();
         json out = json::array();
         for (long d = 1; d <= n; ++d)
           if (n % d == 0 && d % m == 0) out.push_back(d);
         return json{{"divisors", out}};
       }},
      {"arith.degrees_divisible_by",
       [](const json& a) {
         long lo = a.at("min").get<long>(), hi = a.at("max").get<long>(), m = a.at("m").get<long>();
         json out = json::array();
         for (long d = lo; d <= hi; ++d)
           if (d % m == 0) out.push_back(d);
         return json{{"degrees", out}};
       }},
  };
  return r;
}

struct Builder {
  ProofCertificate cert;

  json verified(const std::string& statement, const std::string& computation, json args) {
    json result = run_computation(computation, args);
    cert.steps.push_back({StepKind::Verified, statement, computation, std::move(args), result, std::nullopt});
    return result;
  }
  void axiom(Axiom a, const std::string& statement) {
    cert.steps.push_back({StepKind::Axiom, statement, "", json(), json(), a});
  }
};

struct Prelude {
  InvariantVector c, d;
};

Prelude common_prelude(Builder& b, const InvariantVector& a) {
  long idx = brauer::index(a);
  if (idx != 6) throw DomainError(ErrorCode::IndexMismatch, "index of A is " + std::to_string(idx) + ", expected 6");
  b.verified("ind(A) = 6", "brauer.index", {{"u", a.to_json()}});
  json parts = b.verified("A = C + D with C = 3A of order 2 and D = 4A of order 3", "brauer.decompose_degree6",
                          {{"u", a.to_json()}});
  Prelude p{cls(parts.at("C")), cls(parts.at("D"))};
  b.verified("[C] + [D] = [A]", "brauer.tensor", {{"u", p.c.to_json()}, {"v", p.d.to_json()}});
  b.axiom(Axiom::CanonicalDimension,
          "SB(A) and Y x Z (Y = SB(C), Z = SB(D)) have the same splitting fields, so cdim SB(A) = cdim(Y x Z) <= dim(Y x Z) = 3");
  return p;
}

}  // namespace

json run_computation(const std::string& name, const json& args) {
  auto it = registry().find(name);
  if (it == registry().end()) throw DomainError(ErrorCode::InvalidArgument, "unknown computation " + name);
  return it->second(args);
}

std::vector<std::string> computation_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

Recheck recheck(const ProofCertificate& cert) {
  Recheck r;
  if (cert.inner) r = recheck(*cert.inner);
  for (const auto& s : cert.steps) {
    if (s.kind != StepKind::Verified) continue;
    ++r.verified;
    if (run_computation(s.computation, s.args).dump() == s.result.dump()) {
      ++r.reproduced;
    } else {
      r.mismatches.push_back(s.computation + " " + s.args.dump());
    }
  }
  return r;
}

ProofCertificate replay_first_proof(const InvariantVector& a, const brauer::QuadField& k) {
  if (k.is_split()) throw DomainError(ErrorCode::InvalidArgument, "the first proof needs a quadratic field K");
  Builder b;
  b.cert.proof = "first";
  b.cert.input = {{"A", a.to_json()}, {"K", k.to_string()}};
  Prelude p = common_prelude(b, a);
  b.axiom(Axiom::Resolution, "assume cdim SB(A) <= 2; a splitting surface can be taken smooth and projective");
  b.axiom(Axiom::Castelnuovo, "contracting exceptional curves gives a minimal smooth projective surface X");
  b.axiom(Axiom::MinimalModelReduction,
          "X is geometrically rational, n_X is divisible by 6, and X has rational maps to and from Y x Z");
  b.axiom(Axiom::IskovskikhMori, "X is a conic bundle over a smooth conic or a del Pezzo surface of degree 1..9");
  b.verified("a conic bundle over a conic has n_X | 4; no divisor of 4 is divisible by 6",
             "arith.divisors_divisible_by", {{"n", 4}, {"m", 6}});
  b.verified("for a del Pezzo surface 6 | n_X | d with 1 <= d <= 9 forces d = 6", "arith.degrees_divisible_by",
             {{"min", 1}, {"max", 9}, {"m", 6}});
  b.axiom(Axiom::DelPezzoSix, "X = S(B,tau,L) with B of degree 3 over a quadratic etale K with unitary involution");
  b.axiom(Axiom::DelPezzoIndex, "n_S = 6 is only possible when K and B are both non-split");
  for (bool ks : {true, false}) {
    for (bool bs : {true, false}) {
      b.verified(std::string("index 6 with K ") + (ks ? "split" : "non-split") + ", B " + (bs ? "split" : "non-split"),
                 "dp6.lemma_number_check", {{"center_split", ks}, {"algebra_split", bs}, {"index", 6}});
    }
  }
  b.axiom(Axiom::Amitsur,
          "B becomes split over K(Z), so [B] lies in the subgroup generated by [D_K]; being non-split, B ~ D_K or D_K^2");
  InvariantVector d2 = multiple(2, p.d);
  json b1 = b.verified("B1 = res_{K/F}(D)", "brauer.restriction", {{"u", p.d.to_json()}, {"K", k.to_string()}});
  json b2 = b.verified("B2 = res_{K/F}(2D)", "brauer.restriction", {{"u", d2.to_json()}, {"K", k.to_string()}});
  json c1 = b.verified("cor_{K/F}(B1) = 2[D]", "brauer.corestriction",
                       {{"u", b1.at("class")}, {"compare", multiple(2, p.d).to_json()}});
  json c2 = b.verified("cor_{K/F}(B2) = 2[2D]", "brauer.corestriction",
                       {{"u", b2.at("class")}, {"compare", multiple(4, p.d).to_json()}});
  b.axiom(Axiom::UnitaryInvolution, "B carries an involution of the second kind, so cor_{K/F}[B] = 0");
  json u1 = b.verified("B1 admits a unitary involution", "brauer.admits_unitary_involution", {{"u", b1.at("class")}});
  json u2 = b.verified("B2 admits a unitary involution", "brauer.admits_unitary_involution", {{"u", b2.at("class")}});
  json od = b.verified("[D] has order 3, so 2[D] != 0", "brauer.order", {{"u", p.d.to_json()}});
  bool contradiction = !b1.at("split").get<bool>() && !b2.at("split").get<bool>() &&
                       c1.at("equals_compare").get<bool>() && c2.at("equals_compare").get<bool>() &&
                       !u1.at("admits").get<bool>() && !u2.at("admits").get<bool>() && od.at("order").get<long>() == 3;
  b.cert.contradiction = contradiction;
  b.cert.verdict = contradiction ? "contradiction: cdim SB(A) = 3" : "no contradiction reached";
  return b.cert;
}

ProofCertificate replay_second_proof(const InvariantVector& a) {
  Builder b;
  b.cert.proof = "second";
  b.cert.input = {{"A", a.to_json()}};
  Prelude p = common_prelude(b, a);
  b.axiom(Axiom::CanonicalDimension, "assume cdim SB(A) <= 2; then cdim(Y x Z) <= 2");
  b.axiom(Axiom::Amitsur, "[C] dies over F(Y) and [D] over F(Z), hence both lie in Br(F(Y x Z)/F)");
  b.verified("[C] lies in the kernel for SB(C)", "brauer.chatelet_kernel", {{"u", p.c.to_json()}});
  b.verified("[D] lies in the kernel for SB(D)", "brauer.chatelet_kernel", {{"u", p.d.to_json()}});
  b.axiom(Axiom::UnirationalKernel,
          "for the identity map of Y x Z: two classes in the kernel are both of index | 3 or both quaternion/biquaternion");
  json r = b.verified("apply the compatibility rule to (C, D)", "proof.corollary_3or4",
                      {{"a", p.c.to_json()}, {"b", p.d.to_json()}});
  b.cert.contradiction = !r.at("compatible").get<bool>() && r.contains("witness");
  b.cert.verdict = b.cert.contradiction ? "contradiction: cdim SB(A) = 3" : "no contradiction reached";
  return b.cert;
}

InvariantVector degree6_witness() {
  return InvariantVector({{brauer::Place::prime(7), brauer::Fraction1(1, 6)}, {brauer::Place::prime(13), brauer::Fraction1(5, 6)}});
}

ProofCertificate corollary_cdpgl(const ProofCertificate& cert) {
  Builder b;
  b.cert.proof = "cdim_pgl6";
  b.cert.input = {{"from", cert.proof}};
  b.cert.inner = std::make_shared<const ProofCertificate>(cert);
  if (!cert.contradiction) return b.cert;
  b.axiom(Axiom::TorsorCorrespondence,
          "cdim PGL_6 is the maximum of cdim SB(A) over degree-6 central simple algebras over extensions of F");
  b.axiom(Axiom::CanonicalDimension, "every degree-6 A has cdim SB(A) <= 3");
  json w = b.verified("a degree-6 division algebra exists over Q", "brauer.index", {{"u", degree6_witness().to_json()}});
  b.cert.contradiction = true;
  b.cert.verdict = w.at("index").get<long>() == 6 ? "cdim PGL_6 = 3" : "";
  return b.cert;
}

std::vector<InvariantVector> index6_corpus(std::uint64_t seed, std::size_t n) {
  static const std::vector<long> primes{5, 7, 11, 13, 17, 19};
  std::mt19937_64 rng(seed);
  std::vector<InvariantVector> out;
  while (out.size() < n) {
    std::vector<long> ps;
    for (long p : primes)
      if (rng() % 2) ps.push_back(p);
    if (ps.size() < 2) continue;
    auto u = brauer::random_class(rng, 6, ps, true);
    if (brauer::index(u) == 6) out.push_back(u);
  }
  return out;
}

}  // namespace pezzo::proof
