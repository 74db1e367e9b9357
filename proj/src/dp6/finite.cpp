#include "pezzo/dp6/finite.hpp"

#include <map>
#include <numeric>
#include <set>

namespace pezzo::dp6 {

using algebra::UnitaryAlgebra;
using hexagon::HexAut;
using hexagon::LineLabel;

const char* ltype_name(LType t) {
  switch (t) {
    case LType::Split: return "split";
    case LType::Mixed: return "mixed";
    case LType::Inert: return "inert";
  }
  return "?";
}

std::string TwistSpec::id() const {
  return "F" + std::to_string(p) + "/K-" + (center_inert ? "inert" : "split") + "/L-" + ltype_name(l);
}

TwistSpec TwistSpec::parse(const std::string& id) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (bool inert : {false, true}) {
      for (LType l : {LType::Split, LType::Mixed, LType::Inert}) {
        TwistSpec t{p, inert, l};
        if (t.id() == id) return t;
      }
    }
  }
  throw DomainError(ErrorCode::ParseError, "unknown surface id '" + id + "'");
}

std::vector<TwistSpec> twist_corpus() {
  std::vector<TwistSpec> out;
  for (std::uint32_t p : {2u, 3u}) {
    for (bool inert : {false, true}) {
      for (LType l : {LType::Split, LType::Mixed, LType::Inert}) out.push_back({p, inert, l});
    }
  }
  return out;
}

UnitaryAlgebra<GF> inert_model(const GF& f) {
  for (const auto& t : f.elements()) {
    for (const auto& n : f.elements()) {
      if (roots(Poly<GF>(f, {-n, -t, f.one()})).empty()) return UnitaryAlgebra<GF>::hermitian(f, t, n);
    }
  }
  throw DomainError(ErrorCode::NoQuadraticExtension, "no irreducible quadratic over " + f.name());
}

Surface make_surface(const TwistSpec& spec) {
  GF f = GF::prime(spec.p);
  auto alg = spec.center_inert ? inert_model(f) : UnitaryAlgebra<GF>::split_exchange(f);
  algebra::CubicSub<GF> l = [&] {
    switch (spec.l) {
      case LType::Split: return algebra::cubic_diagonal(alg);
      case LType::Mixed: return algebra::cubic_from_minpoly(alg, find_irreducible(spec.p, 2) * Poly<GF>(f, {f.one(), f.one()}));
      case LType::Inert: break;
    }
    return algebra::cubic_from_minpoly(alg, find_irreducible(spec.p, 3));
  }();
  return build_surface(alg, l);
}

GF extension(const GF& f, unsigned k) { return GF::get(f.p(), f.k() * k); }

CompiledSystem compile(const Surface& s, const GF& target) {
  CompiledSystem sys{target, s.coordinates.size(), {}};
  for (const auto& q : s.equations) {
    std::vector<CompiledSystem::Term> terms;
    for (std::size_t i = 0; i < sys.n; ++i) {
      for (std::size_t j = i; j < sys.n; ++j) {
        if (q.at(i, j).is_zero()) continue;
        terms.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), embed(q.at(i, j), target).code()});
      }
    }
    sys.quadrics.push_back(std::move(terms));
  }
  return sys;
}

nlohmann::json PointCountRecord::to_json() const {
  return {{"surface", surface},  {"q", q},
          {"k", k},              {"count", raw},
          {"trace", trace},      {"predicted", predicted.get_ui()},
          {"matches", matches()}};
}

PointCountRecord count_points(const Surface& s, unsigned k, const HexAut& phi, const hexagon::TraceTable& table,
                              std::uint64_t budget) {
  GF e = extension(s.field(), k);
  PointCountRecord rec;
  rec.q = s.field().q();
  rec.k = k;
  rec.raw = count_points_parallel(compile(s, e), budget);
  rec.trace = hexagon::trace_of(phi.power(static_cast<int>(k)), table);
  Integer qk(static_cast<unsigned long>(e.q()));
  rec.predicted = qk * qk + qk * rec.trace + 1;
  return rec;
}

namespace {

std::vector<GFElem> normalized(std::vector<GFElem> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      GFElem inv = x.inv();
      for (auto& y : v) y = y * inv;
      break;
    }
  }
  return v;
}

std::vector<std::uint32_t> codes(const std::vector<GFElem>& v) {
  std::vector<std::uint32_t> out;
  for (const auto& x : v) out.push_back(x.code());
  return out;
}

/// Root of w^2 - t w - n in E used for K (x) E -> E.
GFElem center_root(const Surface& s, const GF& e) {
  const auto& k = s.algebra.center();
  if (k.is_split()) return embed(k.roots().first, e);
  auto r = roots(Poly<GF>(e, {-embed(k.n(), e), -embed(k.t(), e), e.one()}));
  if (r.empty()) throw DomainError(ErrorCode::NotSplitOverBase, "center does not split over " + e.name());
  return r.front();
}

/// The 3x3 matrix over E attached to a symmetric element.
Matrix<GF> realize(const Surface& s, const Surface::Sym& v, const GF& e, const GFElem& r) {
  auto x = s.algebra.sym_to_matrix(v);
  Matrix<GF> m(e, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = embed(x(i, j).re(), e) + embed(x(i, j).im(), e) * r;
  return m;
}

struct Realization {
  GF field;
  Matrix<GF> coords;  // 9 x 7, columns vec of the coordinate matrices
  algebra::SplitCertificate<GF> cert;
};

Realization realize_all(const Surface& s, const GF& e) {
  GFElem r = center_root(s, e);
  std::vector<std::vector<GFElem>> cols;
  for (const auto& v : s.coordinates) cols.push_back(realize(s, v, e, r).data());
  std::vector<Matrix<GF>> gens;
  for (const auto& b : s.l.basis) gens.push_back(realize(s, b, e, r));
  return {e, Matrix<GF>::from_columns(e, 9, cols), algebra::split_normalize_matrices(e, gens)};
}

/// Surface coordinates of p n p^{-1}.
std::vector<GFElem> pull_back(const Realization& re, const Matrix<GF>& n) {
  Matrix<GF> m = re.cert.p * n * re.cert.p_inv;
  return solve(re.coords, m.data());
}

Matrix<GF> unit(const GF& e, std::size_t i, std::size_t j) {
  Matrix<GF> m(e, 3, 3);
  m(i, j) = e.one();
  return m;
}

Matrix<GF> stack(const GF& e, const std::vector<std::vector<GFElem>>& rows) {
  Matrix<GF> m(e, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix<GF> echelon(Matrix<GF> m) {
  rref_in_place(m);
  return m;
}

std::vector<Quadric<GF>> equations_over(const Surface& s, const GF& e) {
  std::vector<Quadric<GF>> out;
  for (const auto& q : s.equations) {
    Quadric<GF> qe(e, q.variables());
    for (std::size_t i = 0; i < q.variables(); ++i)
      for (std::size_t j = i; j < q.variables(); ++j) qe.at(i, j) = embed(q.at(i, j), e);
    out.push_back(std::move(qe));
  }
  return out;
}

bool on_span(const std::vector<Quadric<GF>>& eqs, const std::vector<GFElem>& a, const std::vector<GFElem>& b) {
  return std::all_of(eqs.begin(), eqs.end(), [&](const Quadric<GF>& q) { return q.vanishes_on_span(a, b); });
}

GFElem frobenius_q(const GFElem& x, unsigned base_degree) {
  GFElem y = x;
  for (unsigned i = 0; i < base_degree; ++i) y = y.frobenius();
  return y;
}

}  // namespace

EquivalenceReport verify_split_equivalence(const Surface& s) {
  if (!s.provenance.center_split || s.provenance.l_degrees != std::vector<int>{1, 1, 1}) {
    throw DomainError(ErrorCode::InvalidArgument, "split equivalence needs split K and L");
  }
  const GF& f = s.field();
  Realization re = realize_all(s, f);
  std::vector<std::vector<GFElem>> plane;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements()) plane.push_back({f.one(), a, b});
  for (const auto& b : f.elements()) plane.push_back({f.zero(), f.one(), b});
  plane.push_back({f.zero(), f.zero(), f.one()});

  EquivalenceReport rep;
  std::set<std::vector<std::uint32_t>> image;
  for (const auto& x : plane) {
    for (const auto& y : plane) {
      if (!(x[0] * y[0] == x[1] * y[1] && x[1] * y[1] == x[2] * y[2])) continue;
      ++rep.model_points;
      Matrix<GF> n(f, 3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) n(i, j) = x[i] * y[j];
      image.insert(codes(normalized(pull_back(re, n))));
    }
  }
  std::set<std::vector<std::uint32_t>> pts;
  for (const auto& p : list_points(s, f)) pts.insert(codes(p));
  rep.surface_points = pts.size();
  rep.injective = image.size() == rep.model_points;
  rep.equal_sets = image == pts;
  return rep;
}

unsigned splitting_degree(const Surface& s) {
  if (s.provenance.l_degrees.empty()) throw DomainError(ErrorCode::InvalidArgument, "splitting type of L unknown");
  unsigned m = s.provenance.center_split ? 1 : 2;
  for (int d : s.provenance.l_degrees) m = std::lcm(m, static_cast<unsigned>(d));
  return m;
}

nlohmann::json LineConfiguration::to_json() const {
  nlohmann::json ls = nlohmann::json::array();
  for (const auto& l : lines) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < 2; ++i) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : l.basis.row(i)) r.push_back(x.to_string());
      rows.push_back(r);
    }
    ls.push_back({{"label", hexagon::line_name(l.label)}, {"basis", rows}});
  }
  nlohmann::json adj = nlohmann::json::array();
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (meets[i][j]) adj.push_back({hexagon::line_name(lines[i].label), hexagon::line_name(lines[j].label)});
  return {{"field", field.name()}, {"degree", degree},       {"lines", ls},
          {"adjacent", adj},       {"hexagon", hexagon},     {"equations_vanish", equations_vanish}};
}

LineConfiguration find_lines(const Surface& s, unsigned m) {
  if (m == 0) m = splitting_degree(s);
  GF e = extension(s.field(), m);
  Realization re = realize_all(s, e);
  auto eqs = equations_over(s, e);

  LineConfiguration conf{e, m, {}, {}, false, false, false};
  for (std::size_t idx = 0; idx < 6; ++idx) {
    std::size_t i = idx % 3, j = (i + 1) % 3, k = (i + 2) % 3;
    bool row = idx < 3;
    auto a = pull_back(re, row ? unit(e, i, j) : unit(e, j, i));
    auto b = pull_back(re, row ? unit(e, i, k) : unit(e, k, i));
    conf.lines.push_back({echelon(stack(e, {a, b})), hexagon::kAllLines[idx]});
  }
  conf.equations_vanish = true;
  for (const auto& l : conf.lines) conf.equations_vanish = conf.equations_vanish && on_span(eqs, l.basis.row(0), l.basis.row(1));

  conf.distinct = true;
  conf.hexagon = true;
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      if (x == y) continue;
      std::size_t r = rank(stack(e, {conf.lines[x].basis.row(0), conf.lines[x].basis.row(1), conf.lines[y].basis.row(0),
                                     conf.lines[y].basis.row(1)}));
      conf.distinct = conf.distinct && r >= 3;
      conf.meets[x][y] = r == 3;
      bool expected = (x < 3) != (y < 3) && x % 3 != y % 3;
      conf.hexagon = conf.hexagon && conf.meets[x][y] == expected;
    }
  }
  return conf;
}

std::vector<Matrix<GF>> brute_force_lines(const Surface& s, const GF& target, std::uint64_t budget) {
  auto pts = list_points(s, target, budget);
  auto eqs = equations_over(s, target);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Matrix<GF>> out;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (!on_span(eqs, pts[a], pts[b])) continue;
      Matrix<GF> l = echelon(stack(target, {pts[a], pts[b]}));
      if (seen.insert(codes(l.data())).second) out.push_back(std::move(l));
    }
  }
  return out;
}

HexAut frobenius_on_lines(const Surface& s, const LineConfiguration& conf) {
  if (conf.lines.size() != 6) throw DomainError(ErrorCode::WrongLineCount, "expected 6 lines");
  std::array<int, 6> perm{};
  for (std::size_t i = 0; i < 6; ++i) {
    Matrix<GF> img = conf.lines[i].basis;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < img.cols(); ++c) img(r, c) = frobenius_q(img(r, c), s.field().k());
    img = echelon(img);
    int found = -1;
    for (std::size_t j = 0; j < 6; ++j) {
      if (conf.lines[j].basis == img) found = static_cast<int>(j);
    }
    if (found < 0) throw DomainError(ErrorCode::NotAnAutomorphism, "Frobenius image of a line is not a line");
    perm[i] = found;
  }
  return HexAut::from_line_permutation(perm);
}

bool frobenius_matches_type(const Surface& s, const HexAut& phi) {
  if (phi.s != (s.provenance.center_split ? 0 : 1)) return false;
  std::vector<int> cycles;
  std::array<bool, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = phi.sigma[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles == s.provenance.l_degrees;
}

Integer torus_order(std::uint64_t q, const HexAut& phi) {
  const auto& hex = hexagon::Hexagon::instance();
  const auto& a = hex.t_hat().action(hex.index_of(phi));
  lattice::IntMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? Integer(static_cast<unsigned long>(q)) : Integer(0)) - a(i, j);
  Integer d = lattice::determinant(m);
  return abs(d);
}

nlohmann::json TorusCheck::to_json() const {
  return {{"surface_points", surface_points},
          {"line_points", line_points},
          {"open_points", open_points},
          {"torus_points", torus_points.get_str()},
          {"holds", holds()}};
}

TorusCheck torus_count_check(const Surface& s, const LineConfiguration& conf, const HexAut& phi) {
  TorusCheck t;
  const GF& e = conf.field;
  for (const auto& p : list_points(s, s.field())) {
    ++t.surface_points;
    std::vector<GFElem> pe;
    for (const auto& x : p) pe.push_back(embed(x, e));
    bool on_line = std::any_of(conf.lines.begin(), conf.lines.end(), [&](const LineOnSurface& l) {
      return rank(stack(e, {l.basis.row(0), l.basis.row(1), pe})) == 2;
    });
    t.line_points += on_line;
  }
  t.open_points = t.surface_points - t.line_points;
  t.torus_points = torus_order(s.field().q(), phi);
  return t;
}

}  // namespace pezzo::dp6
