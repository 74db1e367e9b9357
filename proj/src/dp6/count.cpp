#include <limits>

#include "pezzo/dp6/finite.hpp"

namespace pezzo::dp6 {

namespace {

struct Arith {
  const detail::GFData* d;
  std::uint32_t q;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return d->dense() ? d->add_table[a * q + b] : d->add(a, b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return d->dense() ? d->mul_table[a * q + b] : d->mul(a, b); }
};

bool on_system(const CompiledSystem& sys, const Arith& ar, const std::uint32_t* x) {
  for (const auto& quad : sys.quadrics) {
    std::uint32_t acc = 0;
    for (const auto& t : quad) {
      std::uint32_t xi = x[t.i], xj = x[t.j];
      if (xi == 0 || xj == 0) continue;
      acc = ar.add(acc, ar.mul(t.c, ar.mul(xi, xj)));
    }
    if (acc != 0) return false;
  }
  return true;
}

void check_budget(const CompiledSystem& sys, std::uint64_t budget) {
  std::uint64_t size = projective_size(sys.field.q(), static_cast<unsigned>(sys.n - 1));
  if (size > budget) {
    throw DomainError(ErrorCode::EnumerationBudgetExceeded,
                      "P^" + std::to_string(sys.n - 1) + "(" + sys.field.name() + ") has " + std::to_string(size) +
                          " points, budget " + std::to_string(budget));
  }
}

/// Visits points with leading 1 at `lead` and tail index in [begin, end).
template <class Visit>
void walk(const CompiledSystem& sys, std::size_t lead, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const std::uint32_t q = sys.field.q();
  std::vector<std::uint32_t> x(sys.n, 0);
  x[lead] = 1;
  std::uint64_t rest = begin;
  for (std::size_t i = sys.n; i-- > lead + 1;) {
    x[i] = static_cast<std::uint32_t>(rest % q);
    rest /= q;
  }
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    visit(x.data());
    for (std::size_t i = sys.n; i-- > lead + 1;) {
      if (++x[i] < q) break;
      x[i] = 0;
    }
  }
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::uint64_t projective_size(std::uint64_t q, unsigned n) {
  std::uint64_t total = 0, term = 1;
  for (unsigned i = 0; i <= n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - term) return std::numeric_limits<std::uint64_t>::max();
    total += term;
    if (i < n && term > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    term *= q;
  }
  return total;
}

std::uint64_t count_points_serial(const CompiledSystem& sys, std::uint64_t budget) {
  check_budget(sys, budget);
  Arith ar{sys.field.data(), sys.field.q()};
  std::uint64_t count = 0;
  for (std::size_t lead = 0; lead < sys.n; ++lead) {
    walk(sys, lead, 0, ipow(sys.field.q(), static_cast<unsigned>(sys.n - 1 - lead)),
         [&](const std::uint32_t* x) { count += on_system(sys, ar, x); });
  }
  return count;
}

std::uint64_t count_points_parallel(const CompiledSystem& sys, std::uint64_t budget) {
  check_budget(sys, budget);
  Arith ar{sys.field.data(), sys.field.q()};
  constexpr std::uint64_t kChunk = 4096;
  struct Chunk {
    std::size_t lead;
    std::uint64_t begin, end;
  };
  std::vector<Chunk> chunks;
  for (std::size_t lead = 0; lead < sys.n; ++lead) {
    std::uint64_t size = ipow(sys.field.q(), static_cast<unsigned>(sys.n - 1 - lead));
    for (std::uint64_t b = 0; b < size; b += kChunk) chunks.push_back({lead, b, std::min(size, b + kChunk)});
  }
  std::uint64_t count = 0;
  const long nchunks = static_cast<long>(chunks.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (long c = 0; c < nchunks; ++c) {
    std::uint64_t local = 0;
    walk(sys, chunks[c].lead, chunks[c].begin, chunks[c].end,
         [&](const std::uint32_t* x) { local += on_system(sys, ar, x); });
    count += local;
  }
  return count;
}

std::vector<std::vector<GFElem>> list_points(const Surface& s, const GF& target, std::uint64_t budget) {
  CompiledSystem sys = compile(s, target);
  check_budget(sys, budget);
  Arith ar{sys.field.data(), sys.field.q()};
  std::vector<std::vector<GFElem>> out;
  for (std::size_t lead = 0; lead < sys.n; ++lead) {
    walk(sys, lead, 0, ipow(sys.field.q(), static_cast<unsigned>(sys.n - 1 - lead)), [&](const std::uint32_t* x) {
      if (!on_system(sys, ar, x)) return;
      std::vector<GFElem> p;
      for (std::size_t i = 0; i < sys.n; ++i) p.push_back(target.element(x[i]));
      out.push_back(std::move(p));
    });
  }
  return out;
}

std::uint64_t split_model_points(const GF& base, unsigned k, std::uint64_t max_field) {
  GF e = extension(base, k);
  if (e.q() > max_field) {
    throw DomainError(ErrorCode::EnumerationBudgetExceeded,
                      "split model enumeration over " + e.name() + " exceeds field size " + std::to_string(max_field));
  }
  Arith ar{e.data(), e.q()};
  const std::uint32_t q = e.q();
  std::vector<std::array<std::uint32_t, 3>> plane;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) plane.push_back({1, a, b});
  for (std::uint32_t b = 0; b < q; ++b) plane.push_back({0, 1, b});
  plane.push_back({0, 0, 1});
  std::uint64_t count = 0;
  for (const auto& x : plane) {
    for (const auto& y : plane) {
      std::uint32_t p0 = ar.mul(x[0], y[0]);
      count += p0 == ar.mul(x[1], y[1]) && p0 == ar.mul(x[2], y[2]);
    }
  }
  return count;
}

}  // namespace pezzo::dp6
