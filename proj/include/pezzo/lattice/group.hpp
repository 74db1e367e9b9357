#pragma once

#include <string>
#include <vector>

namespace pezzo::lattice {

struct Subgroup {
  std::vector<int> elements;    // sorted element indices
  std::vector<int> generators;  // a minimal generating set, lexicographically first
  std::size_t order() const { return elements.size(); }
  bool contains(int g) const;
};

/// Finite group given by its multiplication table. Axioms are checked on
/// construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table, std::vector<int> generators);

  static FiniteGroup cyclic(int n);

  std::size_t order() const { return labels_.size(); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Smallest subgroup containing the given elements.
  std::vector<int> closure(const std::vector<int>& gens) const;
  Subgroup make_subgroup(const std::vector<int>& elements) const;
  Subgroup full() const;
  Subgroup trivial() const;
  /// All subgroups ordered by (order, sorted element list).
  std::vector<Subgroup> subgroups() const;
  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> conjugacy_classes() const;
  int element_order(int a) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> generators_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

}  // namespace pezzo::lattice
