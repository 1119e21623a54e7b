#include "dickesim/dicke.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "dickesim/binomial.hpp"

namespace dickesim {

double StateVector::norm2() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

namespace {

void check_dicke_args(int L, int k, int max_qubits) {
  if (L < 1) throw std::invalid_argument("dicke_x: L must be positive");
  if (k < 0 || k > L) throw std::invalid_argument("dicke_x: k out of [0, L]");
  if (L > max_qubits || L > 62)
    throw std::length_error("dicke_x: L exceeds dense-state cap");
}

// Parity-weighted hypergeometric sum over the overlap between a fixed
// weight-w mask and a popcount-P index:
//   K_w(P) = sum_i (-1)^i C(P, i) C(L-P, w-i)
double krawtchouk(int L, int w, int P) {
  double s = 0.0;
  for (int i = std::max(0, w - (L - P)); i <= std::min(w, P); ++i) {
    const double term = binom(P, i) * binom(L - P, w - i);
    s += (i % 2 == 0) ? term : -term;
  }
  return s;
}

}  // namespace

double dicke_x_coeff_by_popcount(int L, int k, int pop) {
  // The |-> spins are marked by a weight-(L-k) pattern mask; the z-basis
  // coefficient is the parity sum over all such masks.
  const int w = L - k;
  return krawtchouk(L, w, pop) / std::sqrt(binom(L, k));
}

double dicke_x_coeff(int L, int k, std::uint64_t m) {
  if (L > 62) throw std::length_error("dicke_x_coeff: L too large");
  const int pop = std::popcount(m);
  if (L <= 12) {
    // Direct sum over the C(L, L-k) minus-spin patterns.
    const int w = L - k;
    double s = 0.0;
    const std::uint64_t limit = std::uint64_t{1} << L;
    for (std::uint64_t pat = 0; pat < limit; ++pat) {
      if (std::popcount(pat) != w) continue;
      s += (std::popcount(pat & m) % 2 == 0) ? 1.0 : -1.0;
    }
    return s / std::sqrt(binom(L, k));
  }
  return dicke_x_coeff_by_popcount(L, k, pop);
}

StateVector dicke_x(int L, int k, int max_qubits) {
  check_dicke_args(L, k, max_qubits);
  StateVector v;
  v.num_qubits = L;
  const std::size_t dim = std::size_t{1} << L;
  v.amps.resize(dim);
  std::vector<double> by_pop(L + 1);
  const double scale = std::pow(2.0, -0.5 * L);
  for (int p = 0; p <= L; ++p) by_pop[p] = scale * dicke_x_coeff_by_popcount(L, k, p);
  for (std::size_t m = 0; m < dim; ++m) v.amps[m] = by_pop[std::popcount(m)];
  return v;
}

StateVector read_state(int L, int max_qubits) {
  if (L % 2 != 0) throw std::invalid_argument("read_state: L must be even");
  StateVector d = dicke_x(L, L / 2, max_qubits);
  StateVector d1 = dicke_x(L, L / 2 + 1, max_qubits);
  StateVector v;
  v.num_qubits = L;
  v.amps.resize(d.amps.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t m = 0; m < v.amps.size(); ++m) {
    v.amps[m] = inv_sqrt2 * (d.amps[m] + std::complex<double>(0.0, 1.0) * d1.amps[m]);
  }
  return v;
}

std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("overlap: qubit count mismatch");
  std::complex<double> s = 0.0;
  for (std::size_t m = 0; m < a.amps.size(); ++m) s += std::conj(a.amps[m]) * b.amps[m];
  return s;
}

}  // namespace dickesim
