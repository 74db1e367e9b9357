#include "pezzo/lattice/glattice.hpp"

#include <utility>

#include "pezzo/error.hpp"

namespace pezzo::lattice {

GLattice::GLattice(GroupPtr group, std::vector<IntMatrix> action)
    : group_(std::move(group)), action_(std::move(action)) {
  if (!group_) throw DomainError(ErrorCode::InvalidArgument, "lattice without group");
  const int n = static_cast<int>(group_->order());
  if (static_cast<int>(action_.size()) != n) throw DomainError(ErrorCode::InvalidArgument, "one action matrix per group element required");
  rank_ = action_[0].rows();
  for (const auto& m : action_) {
    if (m.rows() != rank_ || m.cols() != rank_) throw DomainError(ErrorCode::InvalidArgument, "action matrices must be square of equal size");
    Integer d = determinant(m);
    if (d != 1 && d != -1) throw DomainError(ErrorCode::InvalidArgument, "action matrix is not unimodular");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!(action_[a] * action_[b] == action_[group_->mul(a, b)])) {
        throw DomainError(ErrorCode::InvalidArgument, "action is not a homomorphism");
      }
    }
  }
}

GLattice GLattice::trivial(GroupPtr group, std::size_t rank) {
  std::vector<IntMatrix> act(group->order(), IntMatrix::identity(rank));
  return GLattice(std::move(group), std::move(act));
}

GLattice GLattice::permutation(GroupPtr group, const std::vector<std::vector<int>>& perms) {
  std::vector<IntMatrix> act;
  for (const auto& p : perms) {
    IntMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
    act.push_back(std::move(m));
  }
  return GLattice(std::move(group), std::move(act));
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (a.group() != b.group()) throw DomainError(ErrorCode::InvalidArgument, "direct sum over different groups");
  std::vector<IntMatrix> act;
  for (std::size_t g = 0; g < a.actions().size(); ++g) act.push_back(block_diagonal(a.action(g), b.action(g)));
  return GLattice(a.group(), std::move(act));
}

GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& sub) {
  const std::size_t n = sub.order();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local[sub.elements[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(g.label(sub.elements[a]));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = local[g.mul(sub.elements[a], sub.elements[b])];
  }
  std::vector<int> gens;
  for (int x : sub.generators) gens.push_back(local[x]);
  return std::make_shared<const FiniteGroup>(std::move(labels), std::move(table), std::move(gens));
}

GLattice restrict_to(const GLattice& l, const Subgroup& sub, const GroupPtr& sub_group) {
  std::vector<IntMatrix> act;
  for (int x : sub.elements) act.push_back(l.action(x));
  return GLattice(sub_group, std::move(act));
}

LatticeMap::LatticeMap(GLattice src, GLattice tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (source.group() != target.group()) throw DomainError(ErrorCode::InvalidArgument, "map between lattices over different groups");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank()) {
    throw DomainError(ErrorCode::CompositionMismatch, "map matrix shape does not match its lattices");
  }
  for (int g : source.group()->generators()) {
    if (!(matrix * source.action(g) == target.action(g) * matrix)) {
      throw DomainError(ErrorCode::InvalidArgument, "map is not equivariant");
    }
  }
}

IntMatrix fixed_submodule(const GLattice& l, const Subgroup& g) {
  const std::size_t r = l.rank();
  IntMatrix stacked(0, r);
  for (int x : g.generators) stacked = vstack(stacked, l.action(x) - IntMatrix::identity(r));
  return kernel_basis(stacked);
}

std::vector<Integer> h1(const GLattice& l, const Subgroup& g) {
  const std::size_t r = l.rank();
  const std::size_t n = g.order();
  if (r == 0 || n == 1) return {};
  const FiniteGroup& grp = *l.group();
  std::vector<int> local(grp.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local[g.elements[i]] = static_cast<int>(i);

  // Cocycle condition m_{gh} - m_g - g.m_h = 0 for all pairs.
  IntMatrix c(n * n * r, n * r);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int ga = g.elements[a];
      const std::size_t ab = local[grp.mul(ga, g.elements[b])];
      const IntMatrix& rho = l.action(ga);
      for (std::size_t i = 0; i < r; ++i, ++row) {
        c(row, ab * r + i) += 1;
        c(row, a * r + i) -= 1;
        for (std::size_t j = 0; j < r; ++j) c(row, b * r + j) -= rho(i, j);
      }
    }
  }
  IntMatrix z = kernel_basis(c);
  const std::size_t zr = z.cols();
  if (zr == 0) return {};

  // Coboundaries of basis vectors, in Z^1 coordinates.
  IntMatrix bcoords(zr, r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Integer> cob(n * r, 0);
    for (std::size_t a = 0; a < n; ++a) {
      const IntMatrix& rho = l.action(g.elements[a]);
      for (std::size_t i = 0; i < r; ++i) cob[a * r + i] = rho(i, j) - (i == j ? 1 : 0);
    }
    auto x = solve_integer(z, cob);
    if (!x) throw DomainError(ErrorCode::InvalidArgument, "coboundary outside cocycle lattice");
    for (std::size_t i = 0; i < zr; ++i) bcoords(i, j) = (*x)[i];
  }
  SmithForm sf = smith_normal_form(bcoords);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < zr; ++i) {
    Integer d = i < sf.diagonal.size() ? sf.diagonal[i] : Integer(0);
    if (d == 0) throw DomainError(ErrorCode::InvalidArgument, "H^1 of a finite group must be finite");
    if (d > 1) out.push_back(d);
  }
  return out;
}

ExactnessReport is_exact(const std::vector<LatticeMap>& maps) {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (maps[i + 1].matrix.cols() != maps[i].matrix.rows() || maps[i + 1].source.rank() != maps[i].target.rank()) {
      throw DomainError(ErrorCode::CompositionMismatch, "maps " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not composable");
    }
  }
  ExactnessReport rep;
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (!(maps[i].matrix * maps[i - 1].matrix).is_zero()) {
      rep.exact = false;
      rep.failing_node = i;
      rep.reason = "composite of maps " + std::to_string(i - 1) + " and " + std::to_string(i) + " is nonzero";
      return rep;
    }
    if (!(image_basis(maps[i - 1].matrix) == kernel_basis(maps[i].matrix))) {
      rep.exact = false;
      rep.failing_node = i;
      rep.reason = "image of map " + std::to_string(i - 1) + " differs from kernel of map " + std::to_string(i);
      return rep;
    }
  }
  return rep;
}

bool is_intertwiner(const IntMatrix& m, const GLattice& l1, const GLattice& l2, const Subgroup& g) {
  for (int x : g.generators) {
    if (!(m * l1.action(x) == l2.action(x) * m)) return false;
  }
  return true;
}

IsoSearchResult equivariant_iso_search(const GLattice& l1, const GLattice& l2, const Subgroup& g, int bound) {
  if (l1.group() != l2.group() || l1.rank() != l2.rank()) {
    throw DomainError(ErrorCode::InvalidArgument, "iso search needs lattices of equal rank over one group");
  }
  const std::size_t r = l1.rank();
  IsoSearchResult res;
  res.bound = bound;
  if (is_intertwiner(IntMatrix::identity(r), l1, l2, g)) {
    res.found = true;
    res.intertwiner = IntMatrix::identity(r);
    res.candidates_tested = 1;
    return res;
  }
  // Unknown M_{ab} at index a*r + b; rows encode (M rho1 - rho2 M)_{ab}.
  IntMatrix sys(0, r * r);
  for (int x : g.generators) {
    IntMatrix blk(r * r, r * r);
    const IntMatrix& p1 = l1.action(x);
    const IntMatrix& p2 = l2.action(x);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        for (std::size_t c = 0; c < r; ++c) {
          blk(a * r + b, a * r + c) += p1(c, b);
          blk(a * r + b, c * r + b) -= p2(a, c);
        }
      }
    }
    sys = vstack(sys, blk);
  }
  IntMatrix basis = sys.rows() == 0 ? IntMatrix::identity(r * r) : kernel_basis(sys);
  const std::size_t d = basis.cols();
  res.intertwiner_space_rank = d;
  if (d == 0) return res;

  std::vector<long> values{0};
  for (int s = 1; s <= bound; ++s) {
    values.push_back(s);
    values.push_back(-s);
  }
  for (int shell = 0; shell <= bound; ++shell) {
    const std::size_t width = 2 * static_cast<std::size_t>(shell) + 1;
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
      // values[i] has absolute value (i + 1) / 2.
      bool on_shell = shell == 0;
      for (std::size_t i = 0; i < d && !on_shell; ++i) on_shell = idx[i] + 1 >= width - 1;
      if (on_shell) {
        ++res.candidates_tested;
        IntMatrix m(r, r);
        for (std::size_t k = 0; k < d; ++k) {
          const long ck = values[idx[k]];
          if (ck == 0) continue;
          for (std::size_t e = 0; e < r * r; ++e) m(e / r, e % r) += ck * basis(e, k);
        }
        Integer det = determinant(m);
        if (det == 1 || det == -1) {
          res.found = true;
          res.intertwiner = std::move(m);
          return res;
        }
      }
      std::size_t pos = d;
      while (pos > 0 && idx[pos - 1] + 1 == width) {
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  return res;
}

IsoSearchResult equivariant_iso_search(const GLattice& l1, const GLattice& l2, int bound) {
  return equivariant_iso_search(l1, l2, l1.group()->full(), bound);
}

}  // namespace pezzo::lattice
