#include <map>
#include <numeric>

#include "doctest.h"
#include "lattice_oracles.hpp"
#include "pezzo/error.hpp"
#include "pezzo/hexagon/hexagon.hpp"

using namespace pezzo;
using namespace pezzo::hexagon;
using pezzo::lattice::IntMatrix;

namespace {

std::vector<Integer> to_vec(const PicVec& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

TEST_CASE("line classes and the hexagon rule") {
  CHECK(line_class(LineLabel::E1) == PicVec{0, 1, 0, 0});
  CHECK(line_class(LineLabel::F1) == PicVec{1, 0, -1, -1});
  // F1 is the only small class with the required intersection numbers.
  const PicVec k = canonical_class();
  std::vector<PicVec> hits;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          PicVec v{a, b, c, d};
          if (intersection(v, v) == -1 && intersection(v, k) == -1 && intersection(v, line_class(LineLabel::E1)) == 0 &&
              intersection(v, line_class(LineLabel::E2)) == 1 && intersection(v, line_class(LineLabel::E3)) == 1) {
            hits.push_back(v);
          }
        }
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == line_class(LineLabel::F1));

  CHECK(intersection(line_class(LineLabel::E1), line_class(LineLabel::F1)) == 0);
  CHECK(intersection(line_class(LineLabel::E1), line_class(LineLabel::E2)) == 0);
  CHECK(intersection(line_class(LineLabel::E1), line_class(LineLabel::F2)) == 1);
  CHECK(intersection(k, k) == 6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto ei = line_class(kAllLines[i]);
      const auto fj = line_class(kAllLines[3 + j]);
      CHECK(intersection(ei, fj) == (i != j ? 1 : 0));
      if (i != j) {
        CHECK(intersection(ei, line_class(kAllLines[j])) == 0);
        CHECK(intersection(line_class(kAllLines[3 + i]), fj) == 0);
      }
    }
  }
  for (auto l : kAllLines) {
    CHECK(intersection(line_class(l), line_class(l)) == -1);
    CHECK(intersection(line_class(l), k) == -1);
    CHECK(parse_line(line_name(l)) == l);
  }
  PicVec sum{0, 0, 0, 0};
  for (auto l : kAllLines) {
    for (int i = 0; i < 4; ++i) sum[i] += line_class(l)[i];
  }
  CHECK(sum == PicVec{3, -1, -1, -1});
}

TEST_CASE("is_K_divisible") {
  CHECK(!is_K_divisible({-3, 1, 1, 1}));
  CHECK(is_K_divisible({-3}));
  CHECK(is_K_divisible({-2, -2}));
}

TEST_CASE("hex_action matrices") {
  const auto& hx = Hexagon::instance();
  REQUIRE(hx.elements().size() == 12);
  CHECK(hex_action(HexAut{}) == IntMatrix::identity(4));
  HexAut swap{1, {0, 1, 2}};
  CHECK(hex_action(swap).apply(to_vec(line_class(LineLabel::E1))) == to_vec(PicVec{1, 0, -1, -1}));
  const IntMatrix form(4, 4, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
  for (const auto& g : hx.elements()) {
    IntMatrix m = hex_action(g);
    CHECK(m.transpose() * form * m == form);
    CHECK(m.apply(to_vec(canonical_class())) == to_vec(canonical_class()));
    for (auto l : kAllLines) CHECK(m.apply(to_vec(line_class(l))) == to_vec(line_class(g.apply(l))));
    CHECK(HexAut::from_line_permutation(g.line_permutation()) == g);
    for (const auto& h : hx.elements()) CHECK(hex_action(g.compose(h)) == m * hex_action(h));
  }
  // A rotation of the hexagon by one step is not in S2 x S3 acting this way.
  CHECK_THROWS_AS(HexAut::from_line_permutation({4, 5, 3, 0, 1, 2}), DomainError);
  CHECK(swap.word() == "(E1 F1)(E2 F2)(E3 F3)");
}

TEST_CASE("trace table") {
  const TraceTable t = trace_table();
  CHECK(t == TraceTable{4, 2, 1, 0, -1, 2});
  const auto& hx = Hexagon::instance();
  std::map<HexClass, int> sizes;
  long total = 0;
  for (const auto& g : hx.elements()) {
    ++sizes[classify(g)];
    total += trace_of(g, t);
  }
  CHECK(sizes.size() == 6);
  CHECK(total == 12 * static_cast<long>(lattice::fixed_submodule(hx.pic(), hx.group()->full()).cols()));
  CHECK(hx.group()->conjugacy_classes().size() == 6);
}

TEST_CASE("subgroups of S2 x S3") {
  const auto& hx = Hexagon::instance();
  const auto& subs = hx.subgroups();
  REQUIRE(subs.size() == 16);
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 12);
  std::map<std::size_t, int> by_order;
  for (const auto& s : subs) ++by_order[s.order()];
  CHECK(by_order == std::map<std::size_t, int>{{1, 1}, {2, 7}, {3, 1}, {4, 3}, {6, 3}, {12, 1}});
}

TEST_CASE("fixed submodules, H^1 and the trace identity") {
  const auto& hx = Hexagon::instance();
  IntMatrix full = lattice::fixed_submodule(hx.pic(), hx.group()->full());
  REQUIRE(full.cols() == 1);
  auto k = full.col(0);
  const auto kk = to_vec(canonical_class());
  bool plus = k == kk;
  bool minus = true;
  for (int i = 0; i < 4; ++i) minus = minus && k[i] == -kk[i];
  CHECK((plus || minus));
  CHECK(lattice::content(k) == 1);
  CHECK(lattice::fixed_submodule(hx.pic(), hx.group()->trivial()).cols() == 4);

  for (const auto& sub : hx.subgroups()) {
    for (const auto* l : {&hx.pic(), &hx.lines(), &hx.pairs(), &hx.triangles(), &hx.t_hat()}) {
      Integer tr = 0;
      for (int g : sub.elements) tr += l->action(g).trace();
      CHECK(Integer(lattice::fixed_submodule(*l, sub).cols() * sub.order()) == tr);
    }
    CHECK(lattice::h1(hx.pic(), sub).empty());
    CHECK(oracle::brute_h1_order(hx.pic(), sub) == 1);
    CHECK(lattice::h1(hx.lines(), sub).empty());
    CHECK(lattice::h1(hx.pairs(), sub).empty());
    CHECK(lattice::h1(hx.triangles(), sub).empty());
  }
}

TEST_CASE("divisor map and the two exact sequences") {
  const auto& hx = Hexagon::instance();
  CHECK(hx.t_hat().rank() == 2);
  CHECK(lattice::smith_normal_form(hx.divisor_matrix()).diagonal == std::vector<Integer>{1, 1, 1, 1});
  CHECK((hx.divisor_matrix() * hx.t_hat_basis()).is_zero());
  // E1 goes to pair 1 and the E-triangle.
  CHECK(hx.pair_triangle_matrix().col(0) == std::vector<Integer>{1, 0, 0, 1, 0});
  for (std::size_t id = 0; id < hx.subgroups().size(); ++id) {
    CHECK(lattice::is_exact(hx.first_sequence(id)).exact);
    auto second = hx.second_sequence(id);
    CHECK(lattice::is_exact(second).exact);
    CHECK((second[3].matrix * second[2].matrix).is_zero());
  }
}

TEST_CASE("stable isomorphism witness") {
  const auto& w = stable_iso_witness();
  REQUIRE(w.search.found);
  CHECK(w.verified);
  CHECK(w.search.intertwiner.rows() == 5);
  CHECK(abs(lattice::determinant(w.search.intertwiner)) == 1);
  for (const auto& r : all_subgroup_reports()) {
    CHECK(r.stable_iso_found);
    CHECK(r.sequences_exact);
    CHECK(r.h1.empty());
  }
  auto j = subgroup_report(15).to_json();
  CHECK(j["fixed_rank"] == 1);
  CHECK(j["subgroup_id"] == 15);
}
