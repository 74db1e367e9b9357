#include "pezzo/lattice/group.hpp"

#include <algorithm>
#include <set>

#include "pezzo/error.hpp"

namespace pezzo::lattice {

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table, std::vector<int> generators)
    : labels_(std::move(labels)), table_(std::move(table)), generators_(std::move(generators)) {
  const int n = static_cast<int>(labels_.size());
  if (n == 0 || static_cast<int>(table_.size()) != n) throw DomainError(ErrorCode::InvalidArgument, "group table size mismatch");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw DomainError(ErrorCode::InvalidArgument, "group table size mismatch");
    for (int x : row) {
      if (x < 0 || x >= n) throw DomainError(ErrorCode::InvalidArgument, "group table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError(ErrorCode::InvalidArgument, "group has no identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw DomainError(ErrorCode::InvalidArgument, "group table is not associative");
        }
      }
    }
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw DomainError(ErrorCode::InvalidArgument, "group element without inverse");
  }
  for (int g : generators_) {
    if (g < 0 || g >= n) throw DomainError(ErrorCode::InvalidArgument, "generator out of range");
  }
  if (closure(generators_).size() != labels_.size()) {
    throw DomainError(ErrorCode::InvalidArgument, "generators do not generate the group");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back("g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<int> elems{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int g : gens) {
      int x = mul(elems[i], g);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup FiniteGroup::make_subgroup(const std::vector<int>& elements) const {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (closure(sorted) != sorted) throw DomainError(ErrorCode::InvalidArgument, "element set is not a subgroup");
  // Smallest generating set, lexicographically first among those.
  std::vector<int> nonid;
  for (int g : sorted) {
    if (g != identity_) nonid.push_back(g);
  }
  for (std::size_t size = 0; size <= nonid.size(); ++size) {
    std::vector<int> pick(size);
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      for (std::size_t i = 0; i < size; ++i) pick[i] = nonid[idx[i]];
      if (closure(pick) == sorted) return Subgroup{sorted, pick};
      // next combination
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == nonid.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return Subgroup{sorted, nonid};
}

Subgroup FiniteGroup::full() const {
  std::vector<int> all(order());
  for (std::size_t i = 0; i < order(); ++i) all[i] = static_cast<int>(i);
  return make_subgroup(all);
}

Subgroup FiniteGroup::trivial() const { return Subgroup{{identity_}, {}}; }

std::vector<Subgroup> FiniteGroup::subgroups() const {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{{identity_}};
  found.insert({identity_});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int g = 0; g < static_cast<int>(order()); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<int> gens = h;
        gens.push_back(g);
        auto c = closure(gens);
        if (found.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  for (const auto& s : sorted) out.push_back(make_subgroup(s));
  return out;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(order(), false);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < static_cast<int>(order()); ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int g = 0; g < static_cast<int>(order()); ++g) cls.insert(mul(mul(g, a), inverse(g)));
    for (int x : cls) seen[x] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

}  // namespace pezzo::lattice
