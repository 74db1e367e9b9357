#include <random>
#include <set>

#include "doctest.h"
#include "pezzo/algebra/cubic.hpp"

using namespace pezzo;
using namespace pezzo::algebra;

namespace {

GFElem rand_elem(const GF& f, std::mt19937_64& rng) { return f.element(static_cast<std::uint32_t>(rng() % f.q())); }
Rational rand_elem(const RationalField&, std::mt19937_64& rng) { return Rational(static_cast<long>(rng() % 11) - 5); }

template <ExactField F>
typename UnitaryAlgebra<F>::Sym random_sym(const UnitaryAlgebra<F>& a, std::mt19937_64& rng) {
  typename UnitaryAlgebra<F>::Sym s;
  for (int i = 0; i < 9; ++i) s.push_back(rand_elem(a.base(), rng));
  return s;
}

template <ExactField F>
typename UnitaryAlgebra<F>::KMat random_matrix(const UnitaryAlgebra<F>& a, std::mt19937_64& rng) {
  auto m = a.zero_matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = a.center().make(rand_elem(a.base(), rng), rand_elem(a.base(), rng));
  return m;
}

// Characteristic polynomial det(tI - X) by cofactor expansion over K[t].
template <ExactField F>
Poly<QuadExt<F>> charpoly_oracle(const UnitaryAlgebra<F>& a, const typename UnitaryAlgebra<F>::KMat& x) {
  using P = Poly<QuadExt<F>>;
  const auto& k = a.center();
  std::array<std::array<P, 3>, 3> m{{{P(k), P(k), P(k)}, {P(k), P(k), P(k)}, {P(k), P(k), P(k)}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = P(k, {-x(i, j), i == j ? k.one() : k.zero()});
  auto minor = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  return m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
}

template <ExactField F>
void check_model(const UnitaryAlgebra<F>& a, std::mt19937_64& rng) {
  const auto& k = a.center();
  // Structure constants: associativity and tau anti-multiplicativity on basis triples.
  auto table = a.structure_constants();
  auto inv = a.involution_matrix();
  const std::size_t n = UnitaryAlgebra<F>::kDim;
  auto mul = [&](const std::vector<typename F::Elem>& x, const std::vector<typename F::Elem>& y) {
    std::vector<typename F::Elem> out(n, a.base().zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) out[l] = out[l] + x[i] * y[j] * table[i][j][l];
      }
    }
    return out;
  };
  std::vector<std::vector<typename F::Elem>> e;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename F::Elem> v(n, a.base().zero());
    v[i] = a.base().one();
    e.push_back(v);
  }
  bool assoc = true, anti = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      anti = anti && inv.apply(table[i][j]) == mul(inv.col(j), inv.col(i));
      for (std::size_t l = 0; l < n; ++l) assoc = assoc && mul(table[i][j], e[l]) == mul(e[i], table[j][l]);
    }
  CHECK(assoc);
  CHECK(anti);
  CHECK(inv * inv == Matrix<F>::identity(a.base(), n));
  CHECK(table[0][0] == a.coords(a.basis_element(0) * a.basis_element(0)));

  // Sym has dimension 9: nullity of tau - 1.
  CHECK(n - rank(inv - Matrix<F>::identity(a.base(), n)) == 9);
  for (const auto& b : a.sym_basis()) CHECK(a.is_symmetric(a.sym_to_matrix(b)));

  // The involution fixes exactly F in the center K.
  CHECK(a.tau(a.identity()) == a.identity());
  auto w = a.identity();
  for (std::size_t i = 0; i < 3; ++i) w(i, i) = k.omega();
  CHECK(!(a.tau(w) == w));

  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_matrix(a, rng), y = random_matrix(a, rng);
    CHECK(a.tau(x * y) == a.tau(y) * a.tau(x));
    auto s = random_sym(a, rng), t = random_sym(a, rng);
    CHECK(a.matrix_to_sym(a.sym_to_matrix(s)) == s);
    CHECK(a.trace_form(s, t) == a.trace_form(t, s));
    auto xs = a.sym_to_matrix(s);
    auto sh = a.sym_to_matrix(a.sharp(s));
    auto nrd = a.identity();
    for (std::size_t i = 0; i < 3; ++i) nrd(i, i) = k.from_base(a.nrd(s));
    CHECK(xs * sh == nrd);
    CHECK(sh * xs == nrd);
    // x^# = x^2 - Trd(x) x + S(x)
    auto rhs = xs * xs;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        rhs(i, j) = rhs(i, j) - k.from_base(a.trd(s)) * xs(i, j) + (i == j ? k.from_base(a.s_form(s)) : k.zero());
    CHECK(rhs == sh);
    auto chi = charpoly_oracle(a, xs);
    CHECK(chi.coeff(2) == k.from_base(-a.trd(s)));
    CHECK(chi.coeff(1) == k.from_base(a.s_form(s)));
    CHECK(chi.coeff(0) == k.from_base(-a.nrd(s)));
  }
  CHECK(!determinant(a.gram(a.sym_basis())).is_zero());
  CHECK(a.trace_form(a.sym_one(), a.sym_one()) == a.base().from_int(3));
}

}  // namespace

TEST_CASE("split exchange model") {
  std::mt19937_64 rng(1);
  const RationalField q;
  auto a = UnitaryAlgebra<RationalField>::split_exchange(q);
  CHECK(UnitaryAlgebra<RationalField>::kDim == 18);
  check_model(a, rng);
  // tau(a, b) = (b^t, a^t), with (a, b) read off through w -> 1 and w -> 0.
  auto x = random_matrix(a, rng);
  auto tx = a.tau(x);
  const auto& k = a.center();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto first = [&](const auto& m, std::size_t r, std::size_t c) { return k.project(m(r, c)); };
      auto second = [&](const auto& m, std::size_t r, std::size_t c) { return m(r, c).re(); };
      CHECK(first(tx, i, j) == second(x, j, i));
      CHECK(second(tx, i, j) == first(x, j, i));
    }
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) check_model(UnitaryAlgebra<GF>::split_exchange(GF::prime(p)), rng);
}

TEST_CASE("hermitian model") {
  std::mt19937_64 rng(2);
  const GF f2 = GF::prime(2);
  auto h2 = UnitaryAlgebra<GF>::hermitian(f2, f2.one(), f2.one());
  check_model(h2, rng);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    GF f = GF::prime(p);
    // p = 3, 7: -1 is a nonsquare; p = 5: 2 is.
    auto a = UnitaryAlgebra<GF>::hermitian(f, f.zero(), f.from_int(p == 5 ? 2 : -1));
    check_model(a, rng);
  }
  check_model(UnitaryAlgebra<RationalField>::hermitian(RationalField{}, Rational(0), Rational(-1)), rng);
  check_model(UnitaryAlgebra<RationalField>::hermitian(RationalField{}, Rational(0), Rational(2)), rng);
  CHECK_THROWS_AS(UnitaryAlgebra<RationalField>::hermitian(RationalField{}, Rational(0), Rational(4)), DomainError);
  CHECK_THROWS_AS(UnitaryAlgebra<GF>::hermitian(GF::prime(5), GF::prime(5).zero(), GF::prime(5).from_int(4)), DomainError);

  auto q = UnitaryAlgebra<RationalField>::hermitian(RationalField{}, Rational(0), Rational(-1));
  RationalField::Elem one(1);
  typename UnitaryAlgebra<RationalField>::Sym d(9, Rational(0));
  d[0] = 1;
  d[4] = 2;
  d[8] = 3;
  auto dm = q.sym_to_matrix(d);
  CHECK(q.tau(dm) == dm);
}

TEST_CASE("sharp examples") {
  auto a = UnitaryAlgebra<RationalField>::split_exchange(RationalField{});
  CHECK(a.sharp(a.sym_one()) == a.sym_one());
  CHECK(a.sharp(a.sym_unit(0)) == a.sym_zero());
  // Random matrices over F_7 against the cofactor formula.
  std::mt19937_64 rng(3);
  GF f7 = GF::prime(7);
  auto s7 = UnitaryAlgebra<GF>::split_exchange(f7);
  for (int t = 0; t < 50; ++t) {
    auto x = random_sym(s7, rng);
    Matrix<GF> m(f7, 3, 3, x);
    auto adj = s7.sharp(x);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        // cofactor C_ji
        std::vector<GFElem> sub;
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < 3; ++c)
            if (r != j && c != i) sub.push_back(m(r, c));
        auto cof = sub[0] * sub[3] - sub[1] * sub[2];
        CHECK(adj[3 * i + j] == ((i + j) % 2 ? -cof : cof));
      }
  }
}

TEST_CASE("orthogonal complement in the split model") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    GF f = GF::prime(p);
    auto a = UnitaryAlgebra<GF>::split_exchange(f);
    auto l = cubic_diagonal(a);
    auto perp = orth_complement(a, l);
    REQUIRE(perp.size() == 6);
    for (const auto& v : perp) {
      CHECK(v[0].is_zero());
      CHECK(v[4].is_zero());
      CHECK(v[8].is_zero());
    }
    auto fl = f_plus_lperp(a, l);
    REQUIRE(fl.size() == 7);
    std::vector<std::vector<GFElem>> cols(fl.begin(), fl.end());
    CHECK(rank(Matrix<GF>::from_columns(f, 9, cols)) == 7);
    for (const auto& v : fl) {
      CHECK(v[0] == v[4]);
      CHECK(v[4] == v[8]);
    }
    // L and L^perp together span Sym.
    auto all = perp;
    for (const auto& b : l.basis) all.push_back(b);
    std::vector<std::vector<GFElem>> c2(all.begin(), all.end());
    CHECK(rank(Matrix<GF>::from_columns(f, 9, c2)) == 9);
  }
}

TEST_CASE("cubic subalgebras from minimal polynomials") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {2u, 3u}) {
    GF f = GF::prime(p);
    auto split = UnitaryAlgebra<GF>::split_exchange(f);
    auto herm = p == 2 ? UnitaryAlgebra<GF>::hermitian(f, f.one(), f.one())
                       : UnitaryAlgebra<GF>::hermitian(f, f.zero(), f.from_int(-1));
    auto irr3 = find_irreducible(p, 3);
    auto irr2 = find_irreducible(p, 2);
    auto mixed = irr2 * Poly<GF>(f, {f.one(), f.one()});
    for (const auto* alg : {&split, &herm}) {
      for (const auto& poly : {irr3, mixed}) {
        auto l = cubic_from_minpoly(*alg, poly);
        REQUIRE(l.generator.has_value());
        CHECK(alg->charpoly(*l.generator) == poly);
        CHECK(orth_complement(*alg, l).size() == 6);
        CHECK(f_plus_lperp(*alg, l).size() == 7);
      }
      auto d = cubic_diagonal(*alg);
      CHECK(orth_complement(*alg, d).size() == 6);
      // Repeated root: not etale.
      CHECK_THROWS_AS(cubic_from_minpoly(*alg, Poly<GF>::from_ints(f, {0, 0, 0, 1})), DomainError);
    }
  }
}

TEST_CASE("split_normalize") {
  const RationalField q;
  auto a = UnitaryAlgebra<RationalField>::split_exchange(q);
  auto diag = cubic_diagonal(a);
  auto cert = split_normalize(a, diag);
  CHECK(cert.p == Matrix<RationalField>::identity(q, 3));

  auto f = Poly<RationalField>::from_ints(q, {-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
  auto l = cubic_from_minpoly(a, f);
  auto c2 = split_normalize(a, l);
  std::vector<Matrix<RationalField>> gens;
  for (const auto& b : l.basis) gens.emplace_back(q, 3, 3, b);
  CHECK(verify_split_certificate(q, gens, c2));
  std::set<std::string> eig;
  for (std::size_t i = 0; i < 3; ++i) eig.insert(c2.diagonal_images[1](i, i).to_string());
  CHECK(eig == std::set<std::string>{"1", "2", "3"});

  GF f2 = GF::prime(2);
  auto s2 = UnitaryAlgebra<GF>::split_exchange(f2);
  auto irr = find_irreducible(2, 3);
  auto l2 = cubic_from_minpoly(s2, irr);
  CHECK_THROWS_AS(split_normalize(s2, l2), DomainError);
  try {
    split_normalize(s2, l2);
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NotSplitOverBase);
  }
  GF f8 = GF::get(2, 3);
  std::vector<Matrix<GF>> up;
  for (const auto& b : l2.basis) {
    std::vector<GFElem> v;
    for (const auto& x : b) v.push_back(embed(x, f8));
    up.emplace_back(f8, 3, 3, v);
  }
  auto c8 = split_normalize_matrices(f8, up);
  CHECK(verify_split_certificate(f8, up, c8));
}

TEST_CASE("ideal_to_sym") {
  const RationalField q;
  auto a = UnitaryAlgebra<RationalField>::split_exchange(q);
  auto e12 = ideal_to_sym(a, {Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)});
  CHECK(e12 == a.sym_unit(1));
  CHECK(a.sharp(e12) == a.sym_zero());

  GF f2 = GF::prime(2);
  auto s2 = UnitaryAlgebra<GF>::split_exchange(f2);
  std::vector<std::vector<GFElem>> lines;
  for (std::uint32_t code = 1; code < 8; ++code)
    lines.push_back({f2.element(code & 1), f2.element((code >> 1) & 1), f2.element((code >> 2) & 1)});
  std::set<std::vector<std::uint32_t>> points;
  for (const auto& u : lines)
    for (const auto& w : lines) {
      auto x = ideal_to_sym(s2, u, w);
      CHECK(s2.sharp(x) == s2.sym_zero());
      std::vector<std::uint32_t> key;
      for (const auto& c : x) key.push_back(c.code());
      points.insert(key);
    }
  CHECK(points.size() == 49);
}
