#include "dickesim/binomial.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dickesim {

std::uint64_t binom_exact(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 64) throw std::overflow_error("binom_exact: n > 64");
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

constexpr int kLogBinomMaxN = 512;

const std::vector<double>& lgamma_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogBinomMaxN + 2);
    for (int i = 0; i <= kLogBinomMaxN + 1; ++i) t[i] = std::lgamma(i + 1.0);
    return t;
  }();
  return table;
}

}  // namespace

double log_binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (n > kLogBinomMaxN) throw std::out_of_range("log_binom: n exceeds cached table");
  const auto& lg = lgamma_table();
  return lg[n] - lg[k] - lg[n - k];
}

double binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  if (n <= 64) return static_cast<double>(binom_exact(n, k));
  return std::exp(log_binom(n, k));
}

}  // namespace dickesim
