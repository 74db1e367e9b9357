#include "pezzo/dp6/lemma.hpp"

namespace pezzo::dp6 {

LemmaVerdict lemma_number_check(bool center_split, bool algebra_split, const Observation& obs) {
  LemmaVerdict v;
  auto fail = [&](const std::string& what) {
    v.consistent = false;
    v.violated.push_back(what);
  };
  if (obs.index) {
    int n = *obs.index;
    if (n != 1 && n != 2 && n != 3 && n != 6) {
      throw DomainError(ErrorCode::InvalidArgument, "index must be 1, 2, 3 or 6, got " + std::to_string(n));
    }
    if (n == 6 && center_split) fail("index 6 => K not split");
    if (n == 6 && algebra_split) fail("index 6 => B not split");
    if (center_split && 3 % n != 0) fail("K split => index divides 3");
    if (algebra_split && 2 % n != 0) fail("B split => index divides 2");
  }
  if (obs.has_rational_point.value_or(false)) {
    if (!algebra_split) fail("rational point => B split");
    if (obs.index && *obs.index != 1) fail("rational point => index 1");
  }
  return v;
}

LemmaVerdict lemma_number_check(const brauer::InvariantVectorK& b, const Observation& obs) {
  return lemma_number_check(b.field().is_split(), b.is_split(), obs);
}

void require_consistent(const LemmaVerdict& v) {
  if (!v.consistent) throw DomainError(ErrorCode::InconsistentObservation, v.violated.front());
}

}  // namespace pezzo::dp6
