#include "pezzo/brauer/hilbert_oracle.hpp"

#include <array>

#include "pezzo/error.hpp"

namespace pezzo::brauer {

namespace {

using i128 = __int128;

struct Lifter {
  long p;
  long a;
  long b;
  int depth;

  i128 form(i128 x, i128 y, i128 z) const { return z * z - a * x * x - b * y * y; }

  // (x, y, z) solves the form modulo p^j with pj = p^j.
  bool extend(i128 x, i128 y, i128 z, int j, i128 pj) const {
    if (j == depth) return true;
    const i128 next = pj * p;
    for (long dx = 0; dx < p; ++dx) {
      for (long dy = 0; dy < p; ++dy) {
        for (long dz = 0; dz < p; ++dz) {
          i128 nx = x + dx * pj, ny = y + dy * pj, nz = z + dz * pj;
          if (form(nx, ny, nz) % next == 0 && extend(nx, ny, nz, j + 1, next)) return true;
        }
      }
    }
    return false;
  }
};

int valuation(long n, long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

int hilbert_symbol_bruteforce(long a, long b, const Place& v) {
  if (a == 0 || b == 0) throw DomainError(ErrorCode::InvalidArgument, "Hilbert symbol of zero");
  if (v.is_real()) {
    for (long x = 0; x <= 1; ++x) {
      for (long y = 0; y <= 1; ++y) {
        if ((x || y) && a * x * x + b * y * y >= 0) return 1;
      }
    }
    return -1;
  }
  const long p = v.p;
  const int depth = 2 * valuation(4 * a * b, p) + 3;
  Lifter lift{p, a, b, depth};
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      for (long z = 0; z < p; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (lift.form(x, y, z) % p == 0 && lift.extend(x, y, z, 1, p)) return 1;
      }
    }
  }
  return -1;
}

}  // namespace pezzo::brauer
