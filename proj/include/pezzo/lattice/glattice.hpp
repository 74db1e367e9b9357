#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pezzo/lattice/group.hpp"
#include "pezzo/lattice/int_matrix.hpp"

namespace pezzo::lattice {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Free Z-module of finite rank with a linear action of a finite group.
class GLattice {
 public:
  GLattice() = default;
  /// action[g] is the matrix of group element g. Checked to be a
  /// homomorphism into GL_n(Z).
  GLattice(GroupPtr group, std::vector<IntMatrix> action);

  static GLattice trivial(GroupPtr group, std::size_t rank = 1);
  /// Permutation lattice: perms[g][i] is the image of basis vector i.
  static GLattice permutation(GroupPtr group, const std::vector<std::vector<int>>& perms);

  std::size_t rank() const { return rank_; }
  const GroupPtr& group() const { return group_; }
  const IntMatrix& action(int g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const { return action_; }

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

GLattice direct_sum(const GLattice& a, const GLattice& b);

/// The subgroup as a standalone group; element j is sub.elements[j].
GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& sub);
/// Restriction of the action to `sub`, re-indexed over `sub_group`.
GLattice restrict_to(const GLattice& l, const Subgroup& sub, const GroupPtr& sub_group);

/// Equivariant homomorphism source -> target; matrix is target.rank x source.rank.
struct LatticeMap {
  LatticeMap(GLattice source, GLattice target, IntMatrix matrix);
  GLattice source;
  GLattice target;
  IntMatrix matrix;
};

/// Saturated basis (columns) of the invariants under the subgroup.
IntMatrix fixed_submodule(const GLattice& l, const Subgroup& g);

/// Invariant factors > 1 of H^1(G, L).
std::vector<Integer> h1(const GLattice& l, const Subgroup& g);

struct ExactnessReport {
  bool exact = true;
  /// Index of the failing interior node (between maps i-1 and i).
  std::optional<std::size_t> failing_node;
  std::string reason;
};

/// Checks im = ker at every interior node and that composites vanish.
ExactnessReport is_exact(const std::vector<LatticeMap>& maps);

struct IsoSearchResult {
  bool found = false;
  IntMatrix intertwiner;
  int bound = 0;
  std::size_t intertwiner_space_rank = 0;
  std::size_t candidates_tested = 0;
};

/// Deterministic bounded search for a unimodular M with M rho1(g) = rho2(g) M
/// for g in the subgroup's generators. found = false is inconclusive.
IsoSearchResult equivariant_iso_search(const GLattice& l1, const GLattice& l2, const Subgroup& g, int bound = 3);
IsoSearchResult equivariant_iso_search(const GLattice& l1, const GLattice& l2, int bound = 3);

bool is_intertwiner(const IntMatrix& m, const GLattice& l1, const GLattice& l2, const Subgroup& g);

}  // namespace pezzo::lattice
