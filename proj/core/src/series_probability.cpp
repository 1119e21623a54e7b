#include "dickesim/series_probability.hpp"

#include <cmath>
#include <stdexcept>

#include "dickesim/binomial.hpp"

namespace dickesim {

SeriesTerms series_p_terms(int L, double t, double T2, double sum_omega) {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("series_p_terms: L must be even and >= 2");
  const double x = (t / T2) * (t / T2);
  const double tau = std::tanh(0.5 * x);
  const double envelope = std::exp(-0.5 * L * x);
  const int half = L / 2;

  SeriesTerms out;
  for (int n = 0; n <= half; ++n) {
    const double c = binom(half, n);
    out.term1 += c * c * c * c / binom(L, 2 * n) * std::pow(tau, 2 * n);
  }
  out.term1 *= envelope;

  double bracket = 0.0;
  for (int n = 1; n <= half; ++n) {
    const double cn = binom(half, n);
    const double cm = binom(half, n - 1);
    out.term2 += cm * cm * cn * cn / binom(L, 2 * n - 1) * std::pow(tau, 2 * n - 1);
    bracket += cm * cm * cm * cn * (2 * n - 1) / binom(L, 2 * n - 2) * std::pow(tau, 2 * n - 2) -
               cn * cn * cn * cm * (2 * n) / binom(L, 2 * n - 1) * std::pow(tau, 2 * n - 1);
  }
  out.term2 *= envelope;
  out.signal = envelope / (2.0 * L) * sum_omega * t * bracket;
  out.p = 0.5 * out.term1 + 0.5 * out.term2 + out.signal;
  return out;
}

}  // namespace dickesim
