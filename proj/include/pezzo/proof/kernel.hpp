#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/brauer/brauer.hpp"

namespace pezzo::proof {

enum class CaseKind { SeveriBrauerSurface, FormP1xP1, ConicBundle, DelPezzoRankOne };
const char* case_name(CaseKind k);

struct SurfaceCase {
  CaseKind kind = CaseKind::DelPezzoRankOne;
  /// Severi-Brauer surface class, or the base conic class of a conic bundle.
  brauer::InvariantVector cls;
  /// Form of P1 x P1: quadratic algebra K and the conic class over K.
  /// For split K the two factor conics are `cls` and `second`.
  brauer::QuadField k = brauer::QuadField::split();
  std::optional<brauer::InvariantVectorK> conic_k;
  brauer::InvariantVector second;

  static SurfaceCase severi_brauer(brauer::InvariantVector a);
  static SurfaceCase form_p1xp1(brauer::InvariantVectorK conic);
  static SurfaceCase form_p1xp1_split(brauer::InvariantVector q1, brauer::InvariantVector q2);
  static SurfaceCase conic_bundle(brauer::InvariantVector q);
  static SurfaceCase del_pezzo_rank_one();

  nlohmann::json to_json() const;
};

enum class Shape { Zero, Z2, Z2xZ2, Z3 };
const char* shape_name(Shape s);

enum class GeneratorType { Quaternion, Biquaternion, Cubic };
const char* generator_type_name(GeneratorType t);

struct Generator {
  brauer::InvariantVector cls;
  GeneratorType type;
};

struct KernelShape {
  Shape shape = Shape::Zero;
  std::vector<Generator> generators;
  /// False when the case data do not pin down every generator.
  bool determined = true;
  /// Set when the shape comes from a cited rule rather than a computation.
  bool axiom = false;

  nlohmann::json to_json() const;
  /// Generator orders and count agree with the shape.
  bool well_formed() const;
};

std::vector<KernelShape> kernel_shapes(const SurfaceCase& c);
bool in_master_list(const KernelShape& s);
/// Generator types prescribed for the case: cubic, quaternion/biquaternion, quaternion.
bool types_match_case(const SurfaceCase& c, const KernelShape& s);

SurfaceCase random_case(std::mt19937_64& rng);

struct Compatibility {
  bool compatible = true;
  std::string reason;
  std::optional<brauer::InvariantVector> witness;
  nlohmann::json to_json() const;
};

/// Both of index dividing 3, or both of order <= 2 and index <= 4.
Compatibility corollary_3or4_check(const brauer::InvariantVector& a, const brauer::InvariantVector& b);

}  // namespace pezzo::proof
