#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/dp6/surface.hpp"
#include "pezzo/hexagon/hexagon.hpp"

namespace pezzo::dp6 {

using Surface = DP6Surface<GF>;

inline constexpr std::uint64_t kDefaultBudget = 600000;

/// Splitting type of the cubic algebra L over F_q.
enum class LType { Split, Mixed, Inert };
const char* ltype_name(LType t);

struct TwistSpec {
  std::uint32_t p = 2;
  bool center_inert = false;
  LType l = LType::Split;

  std::string id() const;
  static TwistSpec parse(const std::string& id);
};

/// The six (K, L) types over F_p for p in {2, 3}.
std::vector<TwistSpec> twist_corpus();
Surface make_surface(const TwistSpec& spec);
/// Hermitian model over F with the first (t, n) in code order making
/// w^2 - t w - n irreducible.
algebra::UnitaryAlgebra<GF> inert_model(const GF& f);

/// (q^{n+1} - 1) / (q - 1), saturating at UINT64_MAX.
std::uint64_t projective_size(std::uint64_t q, unsigned n);

/// Quadrics with coefficients moved into F_{q^k}, as raw codes.
struct CompiledSystem {
  GF field;
  std::size_t n = 0;
  struct Term {
    std::uint8_t i, j;
    std::uint32_t c;
  };
  std::vector<std::vector<Term>> quadrics;
};
CompiledSystem compile(const Surface& s, const GF& target);

/// Points of P^{n-1}(E) on the system. Reference kernel: one odometer pass.
std::uint64_t count_points_serial(const CompiledSystem& sys, std::uint64_t budget = kDefaultBudget);
/// OpenMP kernel over disjoint index ranges; same result as the serial one.
std::uint64_t count_points_parallel(const CompiledSystem& sys, std::uint64_t budget = kDefaultBudget);
/// Normalized representatives (first nonzero coordinate 1) of all points.
std::vector<std::vector<GFElem>> list_points(const Surface& s, const GF& target, std::uint64_t budget = kDefaultBudget);

struct PointCountRecord {
  std::string surface;
  std::uint64_t q = 0;
  unsigned k = 1;
  std::uint64_t raw = 0;
  long trace = 0;
  Integer predicted;
  bool matches() const { return predicted == Integer(static_cast<unsigned long>(raw)); }
  nlohmann::json to_json() const;
};

GF extension(const GF& f, unsigned k);
PointCountRecord count_points(const Surface& s, unsigned k, const hexagon::HexAut& phi,
                              const hexagon::TraceTable& table, std::uint64_t budget = kDefaultBudget);

/// Brute force on x0 y0 = x1 y1 = x2 y2 in P^2 x P^2 over F_{q^k}.
std::uint64_t split_model_points(const GF& base, unsigned k, std::uint64_t max_field = 81);
/// Segre image of the split model, pulled back into the surface coordinates,
/// equals the point set of the quadric system over the base field.
struct EquivalenceReport {
  std::uint64_t surface_points = 0;
  std::uint64_t model_points = 0;
  bool injective = false;
  bool equal_sets = false;
  bool holds() const { return injective && equal_sets && surface_points == model_points; }
};
EquivalenceReport verify_split_equivalence(const Surface& s);

struct LineOnSurface {
  Matrix<GF> basis;  // 2 x 7, reduced echelon form
  hexagon::LineLabel label;
};

struct LineConfiguration {
  GF field;
  unsigned degree = 1;
  std::vector<LineOnSurface> lines;
  /// meets[i][j]: lines i and j share exactly one point.
  std::array<std::array<bool, 6>, 6> meets{};
  bool distinct = false;
  bool hexagon = false;
  bool equations_vanish = false;
  bool ok() const { return lines.size() == 6 && distinct && hexagon && equations_vanish; }
  nlohmann::json to_json() const;
};

/// Degree over F_q of the field splitting both K and L.
unsigned splitting_degree(const Surface& s);
/// Lines over F_{q^m}; m = 0 picks splitting_degree.
LineConfiguration find_lines(const Surface& s, unsigned m = 0);
/// All lines through pairs of E-points of the surface. Oracle for find_lines.
std::vector<Matrix<GF>> brute_force_lines(const Surface& s, const GF& target, std::uint64_t budget = kDefaultBudget);

hexagon::HexAut frobenius_on_lines(const Surface& s, const LineConfiguration& lines);
/// S2 part equals "K inert"; S3 cycle type equals the degrees of L.
bool frobenius_matches_type(const Surface& s, const hexagon::HexAut& phi);

struct TorusCheck {
  std::uint64_t surface_points = 0;
  std::uint64_t line_points = 0;
  std::uint64_t open_points = 0;
  Integer torus_points;
  bool holds() const { return torus_points == Integer(static_cast<unsigned long>(open_points)); }
  nlohmann::json to_json() const;
};
TorusCheck torus_count_check(const Surface& s, const LineConfiguration& lines, const hexagon::HexAut& phi);
/// |det(q I - phi)| on T^.
Integer torus_order(std::uint64_t q, const hexagon::HexAut& phi);

}  // namespace pezzo::dp6
