#pragma once

#include <cstdint>
#include <string>

namespace dickesim {

// Exact rational on 128-bit integers, enough for the binomial-product
// identities checked here (L <= 16).
struct Rat128 {
  __int128 num = 0;
  __int128 den = 1;

  void reduce();
  bool is_integer() const { return den == 1; }
  long long as_integer() const;
  std::string str() const;
};

Rat128 make_rat(__int128 num, __int128 den);

// Number of ordered pairs of balanced L-bit strings (popcount L/2)
// whose XOR equals a fixed representative mask of weight 2n, counted
// two ways: brute-force enumeration and the closed form
//   C(L, L/2) C(L/2, n)^2 / C(L, 2n).
struct DuplicationCount {
  int L = 0;
  int n = 0;
  long long enumeration = 0;
  Rat128 formula{};
  bool matches = false;
};

DuplicationCount count_balanced_pairs(int L, int n);

// Same for mixed pairs (j balanced, l with popcount L/2 + 1) against a
// weight-(2n-1) mask; closed form
//   C(L, L/2) C(L/2, n-1) C(L/2, n) / C(L, 2n-1).
DuplicationCount count_mixed_pairs(int L, int n);

}  // namespace dickesim
