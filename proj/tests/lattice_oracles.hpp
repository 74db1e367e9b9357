#pragma once

#include "pezzo/lattice/glattice.hpp"

namespace oracle {

using pezzo::Integer;
using pezzo::lattice::GLattice;
using pezzo::lattice::Subgroup;

// |H^1(G,L)| = |(L/nL)^G| / n^{rank L^G} with n = |G|, counted by enumeration.
inline Integer brute_h1_order(const GLattice& l, const Subgroup& g) {
  const long n = static_cast<long>(g.order());
  const std::size_t r = l.rank();
  long total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= n;
  long fixed = 0;
  std::vector<Integer> v(r);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = c % n;
      c /= n;
    }
    bool inv = true;
    for (int x : g.generators) {
      auto w = l.action(x).apply(v);
      for (std::size_t i = 0; i < r && inv; ++i) {
        Integer diff = w[i] - v[i];
        inv = mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
      }
      if (!inv) break;
    }
    if (inv) ++fixed;
  }
  Integer denom = 1;
  for (std::size_t i = 0; i < fixed_submodule(l, g).cols(); ++i) denom *= n;
  return Integer(fixed) / denom;
}

}  // namespace oracle
