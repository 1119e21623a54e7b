#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace dickesim {

// Dense L-qubit state in the computational (sigma_z) basis.  Bit i of a
// basis index m is the label of sigma_z on spin i, with bit value 0
// mapped to eigenvalue +1.
struct StateVector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amps;

  double norm2() const;
};

inline constexpr int kDefaultDenseCap = 16;

// Symmetric Dicke state along x: k spins in |+>, L-k spins in |->,
// written in the z basis.  Amplitudes are real and depend on a basis
// index only through its popcount.
StateVector dicke_x(int L, int k, int max_qubits = kDefaultDenseCap);

// Scaled z-basis coefficient of |D^L_k>_x: returns 2^{L/2} * <m|D^L_k>_x.
// Evaluated by the direct sum over spin permutations for L <= 12 and by
// the parity-weighted hypergeometric sum over popcount(m) otherwise.
double dicke_x_coeff(int L, int k, std::uint64_t m);

// Same coefficient as a function of popcount(m) alone.
double dicke_x_coeff_by_popcount(int L, int k, int pop);

// Readout state (|D^L_{L/2}>_x + i |D^L_{L/2+1}>_x) / sqrt(2).
StateVector read_state(int L, int max_qubits = kDefaultDenseCap);

// <a|b> with conjugation on a.
std::complex<double> overlap(const StateVector& a, const StateVector& b);

}  // namespace dickesim
