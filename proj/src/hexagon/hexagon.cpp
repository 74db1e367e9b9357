#include "pezzo/hexagon/hexagon.hpp"

#include <algorithm>
#include <numeric>

#include "pezzo/error.hpp"
#include "pezzo/fields/matrix.hpp"

namespace pezzo::hexagon {

using lattice::GLattice;
using lattice::IntMatrix;
using lattice::LatticeMap;

namespace {

constexpr std::array<const char*, 6> kLineNames{"E1", "E2", "E3", "F1", "F2", "F3"};

int line_index(LineLabel l) { return static_cast<int>(l); }

std::array<std::array<int, 3>, 6> s3_elements() {
  std::array<std::array<int, 3>, 6> out{};
  std::array<int, 3> p{0, 1, 2};
  std::size_t i = 0;
  do out[i++] = p;
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

IntMatrix column_matrix(const std::array<PicVec, 4>& cols) {
  IntMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace

const char* line_name(LineLabel l) { return kLineNames[line_index(l)]; }

LineLabel parse_line(const std::string& name) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (name == kLineNames[i]) return kAllLines[i];
  }
  throw DomainError(ErrorCode::ParseError, "unknown line label '" + name + "'");
}

PicVec line_class(LineLabel l) {
  const int i = line_index(l);
  if (i < 3) {
    PicVec v{0, 0, 0, 0};
    v[1 + i] = 1;
    return v;
  }
  PicVec v{1, -1, -1, -1};
  v[1 + (i - 3)] = 0;
  return v;
}

PicVec canonical_class() { return {-3, 1, 1, 1}; }

long intersection(const PicVec& a, const PicVec& b) { return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]; }

bool is_K_divisible(const std::vector<long>& k) {
  long g = 0;
  for (long x : k) g = std::gcd(g, x);
  return g > 1;
}

LineLabel HexAut::apply(LineLabel l) const {
  const int i = line_index(l);
  const int side = i / 3;
  const int idx = sigma[i % 3];
  return kAllLines[((side + s) % 2) * 3 + idx];
}

std::array<int, 6> HexAut::line_permutation() const {
  std::array<int, 6> p{};
  for (std::size_t i = 0; i < 6; ++i) p[i] = line_index(apply(kAllLines[i]));
  return p;
}

HexAut HexAut::from_line_permutation(const std::array<int, 6>& perm) {
  HexAut g;
  g.s = perm[0] >= 3 ? 1 : 0;
  for (int i = 0; i < 3; ++i) g.sigma[i] = perm[i] % 3;
  if (g.line_permutation() != perm) {
    throw DomainError(ErrorCode::NotAnAutomorphism, "line permutation is not a hexagon automorphism");
  }
  return g;
}

HexAut HexAut::compose(const HexAut& o) const {
  HexAut r;
  r.s = (s + o.s) % 2;
  for (int i = 0; i < 3; ++i) r.sigma[i] = sigma[o.sigma[i]];
  return r;
}

HexAut HexAut::power(int k) const {
  HexAut r;
  for (int i = 0; i < k; ++i) r = compose(r);
  return r;
}

std::string HexAut::word() const {
  auto p = line_permutation();
  std::string out;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += kLineNames[j];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

HexClass classify(const HexAut& g) {
  int fixed = 0;
  for (int i = 0; i < 3; ++i) fixed += g.sigma[i] == i;
  if (g.s == 0) return fixed == 3 ? HexClass::Identity : fixed == 1 ? HexClass::Transposition : HexClass::ThreeCycle;
  return fixed == 3 ? HexClass::Swap : fixed == 1 ? HexClass::SwapTransposition : HexClass::SwapThreeCycle;
}

const char* class_name(HexClass c) {
  switch (c) {
    case HexClass::Identity: return "identity";
    case HexClass::Swap: return "swap";
    case HexClass::ThreeCycle: return "3-cycle";
    case HexClass::SwapTransposition: return "swap*transposition";
    case HexClass::SwapThreeCycle: return "swap*3-cycle";
    case HexClass::Transposition: return "transposition";
  }
  return "?";
}

IntMatrix hex_action(const HexAut& g) {
  // E1, E2, E3, F1 form a Z-basis of Pic.
  static const IntMatrix basis_inv = [] {
    IntMatrix b = column_matrix({line_class(LineLabel::E1), line_class(LineLabel::E2), line_class(LineLabel::E3),
                                 line_class(LineLabel::F1)});
    Matrix<RationalField> bq(RationalField{}, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) bq(i, j) = Rational(b(i, j));
    }
    auto inv = inverse(bq);
    IntMatrix out(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) out(i, j) = inv(i, j).num();
    }
    return out;
  }();
  IntMatrix img = column_matrix({line_class(g.apply(LineLabel::E1)), line_class(g.apply(LineLabel::E2)),
                                 line_class(g.apply(LineLabel::E3)), line_class(g.apply(LineLabel::F1))});
  return img * basis_inv;
}

TraceTable trace_table() {
  TraceTable t{};
  std::array<bool, kHexClassCount> set{};
  for (int s = 0; s < 2; ++s) {
    for (const auto& sigma : s3_elements()) {
      HexAut g{s, sigma};
      auto c = static_cast<std::size_t>(classify(g));
      long tr = hex_action(g).trace().get_si();
      if (set[c] && t[c] != tr) throw DomainError(ErrorCode::InvalidArgument, "trace is not a class function");
      t[c] = tr;
      set[c] = true;
    }
  }
  return t;
}

long trace_of(const HexAut& g, const TraceTable& table) { return table[static_cast<std::size_t>(classify(g))]; }

Hexagon::Hexagon() {
  for (int s = 0; s < 2; ++s) {
    for (const auto& sigma : s3_elements()) elements_.push_back(HexAut{s, sigma});
  }
  const int n = static_cast<int>(elements_.size());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(elements_[a].word());
    for (int b = 0; b < n; ++b) table[a][b] = index_of(elements_[a].compose(elements_[b]));
  }
  // Swap, transposition (E1 E2)(F1 F2), 3-cycle.
  group_ = std::make_shared<const lattice::FiniteGroup>(labels, table, std::vector<int>{6, 2, 3});
  subgroups_ = group_->subgroups();
  for (const auto& sub : subgroups_) subgroup_groups_.push_back(lattice::subgroup_as_group(*group_, sub));

  std::vector<IntMatrix> pic_act;
  std::vector<std::vector<int>> line_perm, pair_perm, tri_perm;
  for (const auto& g : elements_) {
    pic_act.push_back(hex_action(g));
    auto lp = g.line_permutation();
    line_perm.emplace_back(lp.begin(), lp.end());
    pair_perm.push_back({g.sigma[0], g.sigma[1], g.sigma[2]});
    tri_perm.push_back(g.s == 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0});
  }
  pic_ = GLattice(group_, pic_act);
  lines_ = GLattice::permutation(group_, line_perm);
  pairs_ = GLattice::permutation(group_, pair_perm);
  triangles_ = GLattice::permutation(group_, tri_perm);

  divisor_ = IntMatrix(4, 6);
  pair_triangle_ = IntMatrix(5, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    auto c = line_class(kAllLines[j]);
    for (std::size_t i = 0; i < 4; ++i) divisor_(i, j) = c[i];
    pair_triangle_(j % 3, j) = 1;
    pair_triangle_(3 + j / 3, j) = 1;
  }
  t_hat_basis_ = lattice::kernel_basis(divisor_);
  std::vector<IntMatrix> t_act;
  for (int g = 0; g < n; ++g) {
    IntMatrix img = lines_.action(g) * t_hat_basis_;
    IntMatrix act(t_hat_basis_.cols(), t_hat_basis_.cols());
    for (std::size_t j = 0; j < img.cols(); ++j) {
      auto x = lattice::solve_integer(t_hat_basis_, img.col(j));
      if (!x) throw DomainError(ErrorCode::InvalidArgument, "kernel of the divisor map is not stable");
      for (std::size_t i = 0; i < x->size(); ++i) act(i, j) = (*x)[i];
    }
    t_act.push_back(std::move(act));
  }
  t_hat_ = GLattice(group_, t_act);
}

const Hexagon& Hexagon::instance() {
  static const Hexagon h;
  return h;
}

int Hexagon::index_of(const HexAut& g) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == g) return static_cast<int>(i);
  }
  throw DomainError(ErrorCode::NotAnAutomorphism, "not an element of S2 x S3");
}

std::vector<LatticeMap> Hexagon::first_sequence(std::size_t id) const {
  const auto& sub = subgroups_.at(id);
  const auto& sg = subgroup_groups_.at(id);
  GLattice zero = GLattice::trivial(sg, 0);
  GLattice t = lattice::restrict_to(t_hat_, sub, sg);
  GLattice l = lattice::restrict_to(lines_, sub, sg);
  GLattice p = lattice::restrict_to(pic_, sub, sg);
  return {LatticeMap(zero, t, IntMatrix(t.rank(), 0)), LatticeMap(t, l, t_hat_basis_), LatticeMap(l, p, divisor_),
          LatticeMap(p, zero, IntMatrix(0, p.rank()))};
}

std::vector<LatticeMap> Hexagon::second_sequence(std::size_t id) const {
  const auto& sub = subgroups_.at(id);
  const auto& sg = subgroup_groups_.at(id);
  GLattice zero = GLattice::trivial(sg, 0);
  GLattice z = GLattice::trivial(sg, 1);
  GLattice t = lattice::restrict_to(t_hat_, sub, sg);
  GLattice l = lattice::restrict_to(lines_, sub, sg);
  GLattice pt = lattice::restrict_to(direct_sum(pairs_, triangles_), sub, sg);
  IntMatrix aug(1, 5, {1, 1, 1, -1, -1});
  return {LatticeMap(zero, t, IntMatrix(t.rank(), 0)), LatticeMap(t, l, t_hat_basis_),
          LatticeMap(l, pt, pair_triangle_), LatticeMap(pt, z, aug), LatticeMap(z, zero, IntMatrix(0, 1))};
}

GLattice Hexagon::stable_source() const { return direct_sum(pic_, GLattice::trivial(group_, 1)); }
GLattice Hexagon::stable_target() const { return direct_sum(pairs_, triangles_); }

nlohmann::json SubgroupReport::to_json() const {
  nlohmann::json h = nlohmann::json::array();
  for (const auto& x : h1) h.push_back(x.get_str());
  return {{"subgroup_id", subgroup_id}, {"order", order},           {"generators", generators},
          {"fixed_rank", fixed_rank},   {"h1", h},                   {"sequences_exact", sequences_exact},
          {"stable_iso_found", stable_iso_found}};
}

const StableIsoWitness& stable_iso_witness() {
  static const StableIsoWitness w = [] {
    const auto& hx = Hexagon::instance();
    StableIsoWitness out;
    GLattice src = hx.stable_source();
    GLattice tgt = hx.stable_target();
    out.search = lattice::equivariant_iso_search(src, tgt, hx.group()->full(), 3);
    out.verified = out.search.found && abs(lattice::determinant(out.search.intertwiner)) == 1;
    if (out.verified) {
      for (std::size_t g = 0; g < hx.elements().size(); ++g) {
        out.verified = out.verified &&
                       out.search.intertwiner * src.action(static_cast<int>(g)) == tgt.action(static_cast<int>(g)) * out.search.intertwiner;
      }
    }
    return out;
  }();
  return w;
}

SubgroupReport subgroup_report(std::size_t id) {
  const auto& hx = Hexagon::instance();
  const auto& sub = hx.subgroups().at(id);
  SubgroupReport r;
  r.subgroup_id = id;
  r.order = sub.order();
  for (int g : sub.generators) r.generators.push_back(hx.elements()[g].word());
  r.fixed_rank = lattice::fixed_submodule(hx.pic(), sub).cols();
  r.h1 = lattice::h1(hx.pic(), sub);
  r.sequences_exact = lattice::is_exact(hx.first_sequence(id)).exact && lattice::is_exact(hx.second_sequence(id)).exact;
  const auto& w = stable_iso_witness();
  r.stable_iso_found = w.verified && lattice::is_intertwiner(w.search.intertwiner, hx.stable_source(), hx.stable_target(), sub);
  return r;
}

std::vector<SubgroupReport> all_subgroup_reports() {
  std::vector<SubgroupReport> out;
  for (std::size_t i = 0; i < Hexagon::instance().subgroups().size(); ++i) out.push_back(subgroup_report(i));
  return out;
}

}  // namespace pezzo::hexagon
