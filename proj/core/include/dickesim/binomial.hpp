#pragma once

#include <cstdint>

namespace dickesim {

// Exact binomial coefficient; requires 0 <= k <= n <= 64 so the result
// fits in 64 bits (C(64,32) ~ 1.8e18).
std::uint64_t binom_exact(int n, int k);

// log C(n,k) from a lgamma table cached up to n = 512.  The cache is
// built on first use and read-only afterwards, so concurrent readers
// are safe once any call has returned.
double log_binom(int n, int k);

// C(n,k) as double: exact integer for n <= 64, exp(log_binom) beyond.
double binom(int n, int k);

}  // namespace dickesim
