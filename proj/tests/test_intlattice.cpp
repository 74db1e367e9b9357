#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <random>

#include "doctest.h"
#include "pezzo/error.hpp"
#include "pezzo/lattice/glattice.hpp"
#include "lattice_oracles.hpp"

using namespace pezzo;
using namespace pezzo::lattice;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

// gcd of all k x k minors, by cofactor subsets.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  Integer g = 0;
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
    do {
      IntMatrix sub(k, k);
      std::size_t si = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (csel[j]) sub(si, sj++) = m(i, j);
        }
        ++si;
      }
      Integer d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return g;
}

std::shared_ptr<const FiniteGroup> s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return std::make_shared<FiniteGroup>(labels, table, std::vector<int>{1, 2});
}

Integer product(const std::vector<Integer>& v) {
  Integer p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
  auto s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.diagonal == std::vector<Integer>{1, 1, 1});
  s = smith_normal_form(IntMatrix(2, 2, {2, 0, 0, 3}));
  CHECK(s.diagonal == std::vector<Integer>{1, 6});
  s = smith_normal_form(IntMatrix(2, 2));
  CHECK(s.diagonal == std::vector<Integer>{0, 0});
}

TEST_CASE("smith_normal_form round trip on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = random_matrix(rng, r, c);
    if (trial % 5 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
    }
    auto sf = smith_normal_form(m);
    CHECK(sf.u * m * sf.v == sf.s);
    CHECK(abs(determinant(sf.u)) == 1);
    CHECK(abs(determinant(sf.v)) == 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) CHECK(sf.s(i, j) == 0);
      }
    }
    for (std::size_t i = 0; i < sf.diagonal.size(); ++i) {
      CHECK(sf.diagonal[i] >= 0);
      if (i + 1 < sf.diagonal.size() && sf.diagonal[i] != 0) {
        CHECK(mpz_divisible_p(sf.diagonal[i + 1].get_mpz_t(), sf.diagonal[i].get_mpz_t()));
      }
    }
    if (r <= 4 && c <= 4) {
      Integer prod = 1;
      for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        prod *= sf.diagonal[k - 1];
        CHECK(prod == determinantal_divisor(m, k));
      }
    }
  }
}

TEST_CASE("hermite_normal_form is canonical for the row lattice") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 5);
    auto hf = hermite_normal_form(m);
    CHECK(hf.u * m == hf.h);
    CHECK(abs(determinant(hf.u)) == 1);
    // A unimodular row change leaves the HNF unchanged.
    IntMatrix e = IntMatrix::identity(4);
    e(0, 2) = 3;
    e(3, 1) = -2;
    CHECK(hermite_normal_form(e * m).h == hf.h);
  }
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
  IntMatrix k = kernel_basis(IntMatrix(1, 2, {1, 1}));
  REQUIRE(k.cols() == 1);
  CHECK(((k(0, 0) == 1 && k(1, 0) == -1) || (k(0, 0) == -1 && k(1, 0) == 1)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 6);
    for (std::size_t j = 0; j < 6; ++j) m(2, j) = 2 * m(0, j) - 3 * m(1, j);
    IntMatrix b = kernel_basis(m);
    CHECK((m * b).is_zero());
    std::size_t rk = 0;
    for (const auto& d : smith_normal_form(m).diagonal) rk += d != 0;
    CHECK(b.cols() == 6 - rk);
    for (const auto& d : smith_normal_form(b).diagonal) CHECK(d == 1);
  }
}

TEST_CASE("saturate and solve_integer") {
  IntMatrix m(3, 1, {2, 4, 6});
  IntMatrix s = saturate(m);
  REQUIRE(s.cols() == 1);
  CHECK(content(s.col(0)) == 1);
  CHECK(!solve_integer(m, {1, 2, 3}).has_value());
  CHECK(solve_integer(m, {4, 8, 12}).value() == std::vector<Integer>{2});
}

TEST_CASE("fixed_submodule and h1 on cyclic groups") {
  auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  GLattice sign(c2, {IntMatrix::identity(1), IntMatrix(1, 1, {-1})});
  GLattice triv = GLattice::trivial(c2);
  CHECK(fixed_submodule(sign, c2->full()).cols() == 0);
  CHECK(fixed_submodule(sign, c2->trivial()).cols() == 1);
  CHECK(h1(sign, c2->full()) == std::vector<Integer>{2});
  CHECK(h1(sign, c2->trivial()).empty());
  CHECK(h1(triv, c2->full()).empty());
  CHECK(oracle::brute_h1_order(sign, c2->full()) == 2);
}

TEST_CASE("h1 agrees with the counting oracle on S3 lattices") {
  auto g = s3();
  std::vector<std::vector<int>> perms;
  for (int a = 0; a < 6; ++a) {
    const auto& lab = g->label(a);
    perms.push_back({lab[0] - '0', lab[1] - '0', lab[2] - '0'});
  }
  GLattice perm3 = GLattice::permutation(g, perms);
  // Regular representation.
  std::vector<std::vector<int>> reg(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) reg[a][b] = g->mul(a, b);
  }
  GLattice regular = GLattice::permutation(g, reg);
  // Sign lattice and the augmentation kernel of Z^3 (the root lattice).
  std::vector<IntMatrix> sign_act;
  for (int a = 0; a < 6; ++a) sign_act.push_back(IntMatrix(1, 1, {determinant(perm3.action(a)).get_si()}));
  GLattice sign(g, sign_act);
  IntMatrix root_basis(3, 2, {1, 0, -1, 1, 0, -1});
  std::vector<IntMatrix> root_act;
  for (int a = 0; a < 6; ++a) {
    IntMatrix img = perm3.action(a) * root_basis;
    IntMatrix act(2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      auto x = solve_integer(root_basis, img.col(j));
      REQUIRE(x.has_value());
      act(0, j) = (*x)[0];
      act(1, j) = (*x)[1];
    }
    root_act.push_back(act);
  }
  GLattice root(g, root_act);

  for (const auto& sub : g->subgroups()) {
    CHECK(h1(perm3, sub).empty());
    CHECK(h1(regular, sub).empty());
    for (const GLattice* l : {&perm3, &sign, &root}) {
      CHECK(product(h1(*l, sub)) == oracle::brute_h1_order(*l, sub));
      Integer tr = 0;
      for (int x : sub.elements) tr += l->action(x).trace();
      CHECK(Integer(fixed_submodule(*l, sub).cols() * sub.order()) == tr);
    }
  }
  CHECK(g->subgroups().size() == 6);
}

TEST_CASE("is_exact") {
  auto c1 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(1));
  GLattice z = GLattice::trivial(c1, 1);
  GLattice zero = GLattice::trivial(c1, 0);
  LatticeMap in(zero, z, IntMatrix(1, 0));
  LatticeMap out(z, zero, IntMatrix(0, 1));
  CHECK(is_exact({in, LatticeMap(z, z, IntMatrix::identity(1)), out}).exact);
  auto rep = is_exact({in, LatticeMap(z, z, IntMatrix(1, 1, {2})), out});
  CHECK(!rep.exact);
  CHECK(rep.failing_node == 2u);
  GLattice z2 = GLattice::trivial(c1, 2);
  CHECK_THROWS_AS(is_exact({in, LatticeMap(z2, z2, IntMatrix::identity(2))}), DomainError);
}

TEST_CASE("equivariant_iso_search") {
  auto c2 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  GLattice sign(c2, {IntMatrix::identity(1), IntMatrix(1, 1, {-1})});
  GLattice triv = GLattice::trivial(c2);
  auto same = equivariant_iso_search(sign, sign);
  CHECK(same.found);
  CHECK(same.intertwiner == IntMatrix::identity(1));
  auto none = equivariant_iso_search(triv, sign);
  CHECK(!none.found);
  CHECK(none.bound == 3);
  CHECK(none.intertwiner_space_rank == 0);

  // Z[C2] + Z is stably isomorphic to itself after swapping the summands.
  GLattice reg = GLattice::permutation(c2, {{0, 1}, {1, 0}});
  GLattice a = direct_sum(reg, triv);
  GLattice b = direct_sum(triv, reg);
  auto r = equivariant_iso_search(a, b);
  REQUIRE(r.found);
  CHECK(is_intertwiner(r.intertwiner, a, b, c2->full()));
  CHECK(abs(determinant(r.intertwiner)) == 1);
}

TEST_CASE("matrix JSON round trip") {
  IntMatrix m(2, 2, {1, -2, 0, 3});
  CHECK(m.to_json() == R"([["1","-2"],["0","3"]])");
  CHECK(IntMatrix::parse_json(m.to_json()) == m);
  CHECK_THROWS_AS(IntMatrix::parse_json("[[1],[2,3]]"), DomainError);
}
