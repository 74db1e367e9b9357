#pragma once

#include "pezzo/brauer/brauer.hpp"

namespace pezzo::brauer {

/// Brute-force local solvability of z^2 = a x^2 + b y^2: searches for a
/// primitive solution modulo p^k, k = 2 v_p(4ab) + 3, by lifting one base-p
/// digit at a time. Returns +1 if one exists, else -1.
int hilbert_symbol_bruteforce(long a, long b, const Place& v);

}  // namespace pezzo::brauer
