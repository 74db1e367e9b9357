#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/brauer/brauer.hpp"

namespace pezzo::proof {

/// Cited results. Certificates refer to them by id; nothing here proves them.
enum class Axiom {
  Resolution,
  Castelnuovo,
  IskovskikhMori,
  MinimalModelReduction,
  CanonicalDimension,
  Amitsur,
  DelPezzoSix,
  DelPezzoIndex,
  UnitaryInvolution,
  UnirationalKernel,
  TorsorCorrespondence,
};

struct AxiomInfo {
  const char* id;
  const char* anchor;
};
AxiomInfo axiom_info(Axiom a);

enum class StepKind { Verified, Axiom };

struct Step {
  StepKind kind = StepKind::Axiom;
  std::string statement;
  std::string computation;
  nlohmann::json args;
  nlohmann::json result;
  std::optional<Axiom> axiom;

  nlohmann::json to_json() const;
};

struct ProofCertificate {
  std::string proof;
  nlohmann::json input;
  std::vector<Step> steps;
  bool contradiction = false;
  std::string verdict;
  std::shared_ptr<const ProofCertificate> inner;

  nlohmann::json to_json() const;
  std::string transcript() const;
};

/// Named, deterministic computations that VERIFIED steps refer to.
nlohmann::json run_computation(const std::string& name, const nlohmann::json& args);
std::vector<std::string> computation_names();

struct Recheck {
  std::size_t verified = 0;
  std::size_t reproduced = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return verified == reproduced && mismatches.empty(); }
};
/// Re-runs every VERIFIED step (including wrapped certificates) and compares
/// the serialized results byte for byte.
Recheck recheck(const ProofCertificate& cert);

ProofCertificate replay_first_proof(const brauer::InvariantVector& a,
                                    const brauer::QuadField& k = brauer::QuadField::of(-1));
ProofCertificate replay_second_proof(const brauer::InvariantVector& a);
ProofCertificate corollary_cdpgl(const ProofCertificate& cert);

/// The degree-6 division class used as existence witness.
brauer::InvariantVector degree6_witness();
/// n random classes of index 6 (denominators dividing 6, reciprocity enforced).
std::vector<brauer::InvariantVector> index6_corpus(std::uint64_t seed, std::size_t n);

}  // namespace pezzo::proof
