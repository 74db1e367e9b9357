#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/algebra/cubic.hpp"

namespace pezzo::dp6 {

/// sum_{i <= j} c_ij x_i x_j in n variables.
template <ExactField F>
class Quadric {
 public:
  using Elem = typename F::Elem;

  Quadric(F field, std::size_t n) : f_(std::move(field)), n_(n), c_(n * (n + 1) / 2, f_.zero()) {}

  const F& field() const { return f_; }
  std::size_t variables() const { return n_; }
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }
  const Elem& at(std::size_t i, std::size_t j) const { return c_[slot(i, j)]; }
  Elem& at(std::size_t i, std::size_t j) { return c_[slot(i, j)]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Elem& e) { return e.is_zero(); });
  }

  Elem eval(const std::vector<Elem>& x) const {
    Elem acc = f_.zero();
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = i; j < n_; ++j) acc = acc + at(i, j) * x[i] * x[j];
    }
    return acc;
  }

  /// Q(x + y) - Q(x) - Q(y).
  Elem polar(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    Elem acc = f_.zero();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) acc = acc + at(i, j) * (x[i] * y[j] + x[j] * y[i]);
    }
    return acc;
  }

  /// Vanishes identically on the span of x and y.
  bool vanishes_on_span(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    return eval(x).is_zero() && eval(y).is_zero() && polar(x, y).is_zero();
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        if (!at(i, j).is_zero()) terms.push_back({{"i", i}, {"j", j}, {"c", elem_to_string(at(i, j))}});
      }
    }
    return terms;
  }

 private:
  F f_;
  std::size_t n_;
  std::vector<Elem> c_;
};

struct Provenance {
  std::string field;
  std::string center;
  algebra::Kind kind = algebra::Kind::SplitExchange;
  bool center_split = true;
  std::string l_description;
  /// Degrees of the field factors of L, ascending; empty when unknown.
  std::vector<int> l_degrees;

  nlohmann::json to_json() const {
    return {{"field", field},
            {"center", center},
            {"center_split", center_split},
            {"kind", algebra::kind_name(kind)},
            {"L", l_description},
            {"L_degrees", l_degrees}};
  }
};

/// Zero locus of the components of x -> x^# on P(F + L^perp), in the
/// coordinates of the basis `coordinates` (the first one is 1).
template <ExactField F>
struct DP6Surface {
  using Alg = algebra::UnitaryAlgebra<F>;
  using Sym = typename Alg::Sym;
  using Elem = typename F::Elem;

  Alg algebra;
  algebra::CubicSub<F> l;
  std::vector<Sym> coordinates;
  std::vector<std::string> labels;
  std::vector<Quadric<F>> equations;
  Provenance provenance;

  const F& field() const { return algebra.base(); }

  Sym to_sym(const std::vector<Elem>& c) const {
    Sym x = algebra.sym_zero();
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
      for (std::size_t a = 0; a < 9; ++a) x[a] = x[a] + c[i] * coordinates[i][a];
    }
    return x;
  }

  bool contains(const std::vector<Elem>& c) const {
    return std::all_of(equations.begin(), equations.end(), [&](const Quadric<F>& q) { return q.eval(c).is_zero(); });
  }

  nlohmann::json to_json() const {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& v : coordinates) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& e : v) row.push_back(elem_to_string(e));
      coords.push_back(row);
    }
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& q : equations) eqs.push_back(q.to_json());
    return {{"provenance", provenance.to_json()}, {"labels", labels}, {"coordinates", coords}, {"equations", eqs}};
  }
};

template <ExactField F>
DP6Surface<F> build_surface(const algebra::UnitaryAlgebra<F>& alg, const algebra::CubicSub<F>& l) {
  auto coords = algebra::f_plus_lperp(alg, l);
  const std::size_t n = coords.size();
  std::vector<Quadric<F>> eqs(9, Quadric<F>(alg.base(), n));
  std::vector<typename algebra::UnitaryAlgebra<F>::Sym> sq;
  for (const auto& v : coords) sq.push_back(alg.sharp(v));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < 9; ++a) eqs[a].at(i, i) = sq[i][a];
    for (std::size_t j = i + 1; j < n; ++j) {
      auto s = coords[i];
      for (std::size_t a = 0; a < 9; ++a) s[a] = s[a] + coords[j][a];
      auto sh = alg.sharp(s);
      for (std::size_t a = 0; a < 9; ++a) eqs[a].at(i, j) = sh[a] - sq[i][a] - sq[j][a];
    }
  }
  Provenance prov;
  prov.field = alg.base().name();
  prov.center = alg.center().name();
  prov.kind = alg.kind();
  prov.center_split = alg.center().is_split();
  prov.l_description = l.description;
  if constexpr (std::is_same_v<F, GF>) {
    if (l.generator) {
      prov.l_degrees = factor_degrees(alg.charpoly(*l.generator));
    } else if (l.description == "diagonal") {
      prov.l_degrees = {1, 1, 1};
    }
    std::sort(prov.l_degrees.begin(), prov.l_degrees.end());
  }
  std::vector<std::string> labels{"one"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back("l" + std::to_string(i));
  return DP6Surface<F>{alg, l, std::move(coords), std::move(labels), std::move(eqs), std::move(prov)};
}

}  // namespace pezzo::dp6
