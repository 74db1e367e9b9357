#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/lattice/glattice.hpp"

namespace pezzo::hexagon {

enum class LineLabel { E1, E2, E3, F1, F2, F3 };

inline constexpr std::array<LineLabel, 6> kAllLines{LineLabel::E1, LineLabel::E2, LineLabel::E3,
                                                    LineLabel::F1, LineLabel::F2, LineLabel::F3};

const char* line_name(LineLabel l);
LineLabel parse_line(const std::string& name);

/// Coordinates in the basis (H, E1, E2, E3).
using PicVec = std::array<long, 4>;

PicVec line_class(LineLabel l);
PicVec canonical_class();
/// Form diag(1, -1, -1, -1).
long intersection(const PicVec& a, const PicVec& b);
/// True iff the gcd of the coordinates exceeds 1.
bool is_K_divisible(const std::vector<long>& k);

/// (s, sigma) in S2 x S3. s exchanges E_i and F_i; sigma permutes indices.
struct HexAut {
  int s = 0;
  std::array<int, 3> sigma{0, 1, 2};

  LineLabel apply(LineLabel l) const;
  /// perm[i] = index of the image of kAllLines[i].
  std::array<int, 6> line_permutation() const;
  /// Throws NotAnAutomorphism if perm does not come from S2 x S3.
  static HexAut from_line_permutation(const std::array<int, 6>& perm);

  HexAut compose(const HexAut& o) const;  // this after o
  HexAut power(int k) const;
  bool is_identity() const { return s == 0 && sigma == std::array<int, 3>{0, 1, 2}; }
  /// Cycle notation on line labels, "id" for the identity.
  std::string word() const;
  friend bool operator==(const HexAut& a, const HexAut& b) { return a.s == b.s && a.sigma == b.sigma; }
};

/// Conjugacy classes of S2 x S3 in the fixed reporting order.
enum class HexClass { Identity, Swap, ThreeCycle, SwapTransposition, SwapThreeCycle, Transposition };
inline constexpr std::size_t kHexClassCount = 6;

HexClass classify(const HexAut& g);
const char* class_name(HexClass c);

/// Matrix on Pic in the basis (H, E1, E2, E3).
lattice::IntMatrix hex_action(const HexAut& g);

using TraceTable = std::array<long, kHexClassCount>;
/// Trace of hex_action on each class, computed from the matrices.
TraceTable trace_table();
long trace_of(const HexAut& g, const TraceTable& table);

/// The group H = S2 x S3, its 16 subgroups and the lattices of the hexagon.
class Hexagon {
 public:
  static const Hexagon& instance();

  const lattice::GroupPtr& group() const { return group_; }
  const std::vector<HexAut>& elements() const { return elements_; }
  int index_of(const HexAut& g) const;
  /// Canonical order: (order, sorted element list).
  const std::vector<lattice::Subgroup>& subgroups() const { return subgroups_; }

  const lattice::GLattice& pic() const { return pic_; }
  const lattice::GLattice& lines() const { return lines_; }
  const lattice::GLattice& pairs() const { return pairs_; }
  const lattice::GLattice& triangles() const { return triangles_; }
  const lattice::GLattice& t_hat() const { return t_hat_; }
  /// Columns: basis of the kernel of the divisor map inside Z[lines].
  const lattice::IntMatrix& t_hat_basis() const { return t_hat_basis_; }
  const lattice::IntMatrix& divisor_matrix() const { return divisor_; }
  /// Z[lines] -> Z[pairs] + Z[triangles].
  const lattice::IntMatrix& pair_triangle_matrix() const { return pair_triangle_; }

  /// 0 -> T^ -> Z[lines] -> Pic -> 0 over the given subgroup.
  std::vector<lattice::LatticeMap> first_sequence(std::size_t subgroup_id) const;
  /// 0 -> T^ -> Z[lines] -> Z[pairs] + Z[triangles] -> Z -> 0.
  std::vector<lattice::LatticeMap> second_sequence(std::size_t subgroup_id) const;

  /// Pic + Z and Z[pairs] + Z[triangles].
  lattice::GLattice stable_source() const;
  lattice::GLattice stable_target() const;

 private:
  Hexagon();
  lattice::GroupPtr group_;
  std::vector<HexAut> elements_;
  std::vector<lattice::Subgroup> subgroups_;
  std::vector<lattice::GroupPtr> subgroup_groups_;
  lattice::GLattice pic_, lines_, pairs_, triangles_, t_hat_;
  lattice::IntMatrix t_hat_basis_, divisor_, pair_triangle_;
};

struct SubgroupReport {
  std::size_t subgroup_id = 0;
  std::vector<std::string> generators;
  std::size_t order = 0;
  std::size_t fixed_rank = 0;
  std::vector<Integer> h1;
  bool sequences_exact = false;
  bool stable_iso_found = false;
  nlohmann::json to_json() const;
};

struct StableIsoWitness {
  lattice::IsoSearchResult search;
  bool verified = false;
};

/// Intertwiner Pic + Z -> Z[pairs] + Z[triangles] over the full group.
const StableIsoWitness& stable_iso_witness();

SubgroupReport subgroup_report(std::size_t subgroup_id);
std::vector<SubgroupReport> all_subgroup_reports();

}  // namespace pezzo::hexagon
