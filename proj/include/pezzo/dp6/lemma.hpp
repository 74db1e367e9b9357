#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/brauer/brauer.hpp"
#include "pezzo/error.hpp"

namespace pezzo::dp6 {

struct Observation {
  std::optional<bool> has_rational_point;
  /// gcd of degrees of closed points; one of 1, 2, 3, 6.
  std::optional<int> index;
};

struct LemmaVerdict {
  bool consistent = true;
  std::vector<std::string> violated;
  nlohmann::json to_json() const { return {{"consistent", consistent}, {"violated", violated}}; }
};

/// Checks: index 6 => K and B nonsplit; a rational point => B split;
/// K split => index | 3; B split => index | 2.
LemmaVerdict lemma_number_check(bool center_split, bool algebra_split, const Observation& obs);
LemmaVerdict lemma_number_check(const brauer::InvariantVectorK& b, const Observation& obs);
/// Throws InconsistentObservation naming the first violated implication.
void require_consistent(const LemmaVerdict& v);

}  // namespace pezzo::dp6
