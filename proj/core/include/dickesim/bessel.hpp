#pragma once

namespace dickesim {

// Modified Bessel function I_alpha(x) for alpha in {0, 1}, by power
// series with term-ratio cutoff 1e-17.  Guarded against overflow for
// x > 700 (exp(700) is near the double limit).
double bessel_I(int alpha, double x);

}  // namespace dickesim
