#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dickesim/dicke.hpp"
#include "dickesim/geometry.hpp"

namespace dickesim {

// Time-quadratic dephasing channel acting on L probe spins that each
// pick up a static frequency fields[j] (rad/s) from the target.
struct DephasingChannel {
  double T2 = 1.0;                 // free-induction-decay time, s
  double t = 0.0;                  // interaction time, s
  std::vector<double> fields;      // per-spin omega_s, rad/s

  int num_spins() const { return static_cast<int>(fields.size()); }
};

DephasingChannel make_channel(const SpinLattice& lat, const Couplings& c, double t,
                              double T2);

// Element of the evolved density matrix for a product-basis initial
// state rho(0) = |init><init| with real z-basis amplitudes:
//   init_m init_m'^* exp[i sum_n (w_n t/2)((-1)^{m_n} - (-1)^{m'_n})]
//                    exp[-(t/T2)^2 hamming(m, m')]
std::complex<double> rho_element(std::uint64_t m, std::uint64_t mp,
                                 const DephasingChannel& ch, const StateVector& init);

struct ProbabilityTerms {
  double term_dd = 0.0;    // <D|rho|D>
  double term_d1d1 = 0.0;  // <D'|rho|D'>
  double term_cross = 0.0; // Im <D|rho|D'>
  double p = 0.0;          // term_dd/2 + term_d1d1/2 - term_cross
};

// Readout probability p = <Read|rho(t)|Read> for the balanced Dicke
// probe, evaluated exactly.  Cross terms are grouped by the XOR mask
// m' = m ^ d, which reduces the 4^L double sum to O(2^L L) via
// Walsh-Hadamard correlation over Hamming shells.
ProbabilityTerms exact_p(const DephasingChannel& ch, int max_qubits = 13);

// Literal 4^L double sum, for cross-checking at small L.
ProbabilityTerms exact_p_direct(const DephasingChannel& ch, int max_qubits = 8);

// Error-propagated uncertainty sqrt(p(1-p)) / (sqrt(N) |dp/ds|) with
// N = T/t repetitions and dp/ds by central difference over the
// continuous-s embedding (step 1e-4).  Returns +inf when the slope
// underflows.
double delta_s_empirical(const SpinLattice& lat, const Couplings& c, double t, double T2,
                         double T_total);

// In-place unnormalized Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::vector<std::complex<double>>& a);

}  // namespace dickesim
