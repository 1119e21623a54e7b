#include "dickesim/bessel.hpp"

#include <stdexcept>

namespace dickesim {

double bessel_I(int alpha, double x) {
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("bessel_I: alpha must be 0 or 1");
  if (x < 0.0) throw std::domain_error("bessel_I: x must be nonnegative");
  if (x > 700.0) throw std::overflow_error("bessel_I: x > 700 overflows double range");
  const double q = x * x / 4.0;  // (x/2)^2
  // term_0 = (x/2)^alpha / alpha!
  double term = (alpha == 0) ? 1.0 : x / 2.0;
  double sum = term;
  for (int m = 1; m < 10000; ++m) {
    term *= q / (static_cast<double>(m) * (m + alpha));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace dickesim
