#include "dickesim/pair_counts.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "dickesim/binomial.hpp"

namespace dickesim {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_str(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return neg ? "-" + s : s;
}

void check_args(int L, int n_min, int n, const char* who) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument(std::string(who) + ": L must be even");
  if (L > 16) throw std::length_error(std::string(who) + ": enumeration capped at L = 16");
  if (n < n_min || n > L / 2) throw std::invalid_argument(std::string(who) + ": n out of range");
}

}  // namespace

void Rat128::reduce() {
  if (den == 0) throw std::domain_error("Rat128: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

long long Rat128::as_integer() const {
  if (!is_integer()) throw std::domain_error("Rat128: not an integer");
  return static_cast<long long>(num);
}

std::string Rat128::str() const {
  if (den == 1) return int128_str(num);
  return int128_str(num) + "/" + int128_str(den);
}

Rat128 make_rat(__int128 num, __int128 den) {
  Rat128 r{num, den};
  r.reduce();
  return r;
}

DuplicationCount count_balanced_pairs(int L, int n) {
  check_args(L, 0, n, "count_balanced_pairs");
  DuplicationCount out;
  out.L = L;
  out.n = n;

  const std::uint64_t mask = (std::uint64_t{1} << (2 * n)) - 1;
  const std::uint64_t limit = std::uint64_t{1} << L;
  long long count = 0;
  for (std::uint64_t j = 0; j < limit; ++j) {
    if (std::popcount(j) != L / 2) continue;
    if (std::popcount(j ^ mask) == L / 2) ++count;
  }
  out.enumeration = count;

  const __int128 num = static_cast<__int128>(binom_exact(L, L / 2)) *
                       binom_exact(L / 2, n) * binom_exact(L / 2, n);
  out.formula = make_rat(num, static_cast<__int128>(binom_exact(L, 2 * n)));
  out.matches = out.formula.is_integer() && out.formula.as_integer() == out.enumeration;
  return out;
}

DuplicationCount count_mixed_pairs(int L, int n) {
  check_args(L, 1, n, "count_mixed_pairs");
  DuplicationCount out;
  out.L = L;
  out.n = n;

  const std::uint64_t mask = (std::uint64_t{1} << (2 * n - 1)) - 1;
  const std::uint64_t limit = std::uint64_t{1} << L;
  long long count = 0;
  for (std::uint64_t j = 0; j < limit; ++j) {
    if (std::popcount(j) != L / 2) continue;
    if (std::popcount(j ^ mask) == L / 2 + 1) ++count;
  }
  out.enumeration = count;

  const __int128 num = static_cast<__int128>(binom_exact(L, L / 2)) *
                       binom_exact(L / 2, n - 1) * binom_exact(L / 2, n);
  out.formula = make_rat(num, static_cast<__int128>(binom_exact(L, 2 * n - 1)));
  out.matches = out.formula.is_integer() && out.formula.as_integer() == out.enumeration;
  return out;
}

}  // namespace dickesim
