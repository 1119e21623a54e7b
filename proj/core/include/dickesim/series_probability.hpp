#pragma once

namespace dickesim {

// Closed-form tanh-power series for the three readout-probability
// pieces of the balanced Dicke probe under time-quadratic dephasing,
// valid up to O((omega t)^2) and O(1/L).  With x = (t/T2)^2 and
// tau = tanh(x/2):
//   term1 = e^{-Lx/2} sum_n C(L/2,n)^4 / C(L,2n) tau^{2n}
//   term2 = e^{-Lx/2} sum_n C(L/2,n-1)^2 C(L/2,n)^2 / C(L,2n-1) tau^{2n-1}
//   signal = e^{-Lx/2}/(2L) (sum_omega t)
//            sum_n [ C(L/2,n-1)^3 C(L/2,n) (2n-1) / C(L,2n-2) tau^{2n-2}
//                  - C(L/2,n)^3 C(L/2,n-1) (2n)  / C(L,2n-1) tau^{2n-1} ]
// and p = term1/2 + term2/2 + signal.  The bracket tends to
// (L/2)(I0 - I1)^2 at large L, matching the asymptotic model.
struct SeriesTerms {
  double term1 = 0.0;
  double term2 = 0.0;
  double signal = 0.0;
  double p = 0.0;
};

SeriesTerms series_p_terms(int L, double t, double T2, double sum_omega);

}  // namespace dickesim
