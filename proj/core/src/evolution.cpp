#include "dickesim/evolution.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dickesim/parallel.hpp"

namespace dickesim {

DephasingChannel make_channel(const SpinLattice& lat, const Couplings& c, double t,
                              double T2) {
  if (T2 <= 0.0) throw std::invalid_argument("make_channel: T2 must be positive");
  if (t < 0.0) throw std::invalid_argument("make_channel: t must be nonnegative");
  DephasingChannel ch;
  ch.T2 = T2;
  ch.t = t;
  ch.fields.reserve(lat.count());
  for (double w : lat.omega_over_s) ch.fields.push_back(w * c.s);
  return ch;
}

std::complex<double> rho_element(std::uint64_t m, std::uint64_t mp,
                                 const DephasingChannel& ch, const StateVector& init) {
  const int L = ch.num_spins();
  if (init.num_qubits != L) throw std::invalid_argument("rho_element: length mismatch");
  double phase = 0.0;
  for (int n = 0; n < L; ++n) {
    const double sm = ((m >> n) & 1) ? -1.0 : 1.0;
    const double smp = ((mp >> n) & 1) ? -1.0 : 1.0;
    phase += 0.5 * ch.fields[n] * ch.t * (sm - smp);
  }
  const int dist = std::popcount(m ^ mp);
  const double x = (ch.t / ch.T2) * (ch.t / ch.T2);
  return init.amps[m] * std::conj(init.amps[mp]) *
         std::polar(std::exp(-x * dist), phase);
}

void walsh_hadamard(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("walsh_hadamard: size must be a power of two");
  for (std::size_t h = 1; h < n; h *= 2) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto x = a[j];
        const auto y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

namespace {

void check_even_within_cap(int L, int cap, const char* who) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument(std::string(who) + ": L must be even and >= 2");
  if (L > cap) throw std::length_error(std::string(who) + ": L exceeds cap");
}

ProbabilityTerms assemble(double dd, double d1d1, double cross_im) {
  ProbabilityTerms out;
  out.term_dd = dd;
  out.term_d1d1 = d1d1;
  out.term_cross = cross_im;
  out.p = 0.5 * dd + 0.5 * d1d1 - cross_im;
  return out;
}

}  // namespace

ProbabilityTerms exact_p(const DephasingChannel& ch, int max_qubits) {
  const int L = ch.num_spins();
  check_even_within_cap(L, max_qubits, "exact_p");
  const std::size_t dim = std::size_t{1} << L;

  const StateVector d = dicke_x(L, L / 2, std::max(max_qubits, kDefaultDenseCap));
  const StateVector d1 = dicke_x(L, L / 2 + 1, std::max(max_qubits, kDefaultDenseCap));

  // rho_mm' = c_m c_m' exp[i(E_m - E_m')t] damp, so
  // <Ra|rho|Rb> = sum_d damp(|d|) sum_m (Ra c e^{iEt})_m (Rb c e^{-iEt})_{m^d}
  std::vector<double> energy(dim, 0.0);
  for (int n = 0; n < L; ++n) {
    const double half = 0.5 * ch.fields[n];
    const std::uint64_t bit = std::uint64_t{1} << n;
    for (std::size_t m = 0; m < dim; ++m) energy[m] += (m & bit) ? -half : half;
  }

  std::vector<std::complex<double>> a_d(dim), b_d(dim), a_d1(dim), b_d1(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    const std::complex<double> ph = std::polar(1.0, energy[m] * ch.t);
    const std::complex<double> base = d.amps[m].real() * ph;
    a_d[m] = d.amps[m].real() * base;
    a_d1[m] = d1.amps[m].real() * base;
    b_d[m] = d.amps[m].real() * d.amps[m].real() * std::conj(ph);
    b_d1[m] = d1.amps[m].real() * d.amps[m].real() * std::conj(ph);
  }

  walsh_hadamard(a_d);
  walsh_hadamard(b_d);
  walsh_hadamard(a_d1);
  walsh_hadamard(b_d1);

  std::vector<std::complex<double>> c_dd(dim), c_d1d1(dim), c_cross(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    c_dd[i] = a_d[i] * b_d[i];
    c_d1d1[i] = a_d1[i] * b_d1[i];
    c_cross[i] = a_d[i] * b_d1[i];
  }
  walsh_hadamard(c_dd);
  walsh_hadamard(c_d1d1);
  walsh_hadamard(c_cross);

  const double x = (ch.t / ch.T2) * (ch.t / ch.T2);
  std::vector<double> damp(L + 1);
  for (int w = 0; w <= L; ++w) damp[w] = std::exp(-x * w);

  // partitioned reduction over the XOR-mask index; a fixed chunk count
  // keeps the floating-point summation order independent of the number
  // of worker threads
  constexpr std::size_t kChunks = 8;
  const double inv = 1.0 / static_cast<double>(dim);
  std::array<double, kChunks> dd_part{}, d1_part{};
  std::array<std::complex<double>, kChunks> cross_part{};
  const std::size_t chunk = (dim + kChunks - 1) / kChunks;
  parallel_for(kChunks, [&](std::size_t w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(dim, lo + chunk);
    double dd = 0.0, d1d1 = 0.0;
    std::complex<double> cross = 0.0;
    for (std::size_t delta = lo; delta < hi; ++delta) {
      const double f = damp[std::popcount(delta)] * inv;
      dd += f * c_dd[delta].real();
      d1d1 += f * c_d1d1[delta].real();
      cross += f * c_cross[delta];
    }
    dd_part[w] = dd;
    d1_part[w] = d1d1;
    cross_part[w] = cross;
  });
  double dd = 0.0, d1d1 = 0.0;
  std::complex<double> cross = 0.0;
  for (std::size_t w = 0; w < kChunks; ++w) {
    dd += dd_part[w];
    d1d1 += d1_part[w];
    cross += cross_part[w];
  }
  return assemble(dd, d1d1, cross.imag());
}

ProbabilityTerms exact_p_direct(const DephasingChannel& ch, int max_qubits) {
  const int L = ch.num_spins();
  check_even_within_cap(L, max_qubits, "exact_p_direct");
  const std::size_t dim = std::size_t{1} << L;
  const StateVector d = dicke_x(L, L / 2);
  const StateVector d1 = dicke_x(L, L / 2 + 1);

  double dd = 0.0, d1d1 = 0.0;
  std::complex<double> cross = 0.0;
  for (std::uint64_t m = 0; m < dim; ++m) {
    for (std::uint64_t mp = 0; mp < dim; ++mp) {
      const std::complex<double> el = rho_element(m, mp, ch, d);
      dd += (d.amps[m].real() * d.amps[mp].real() * el).real();
      d1d1 += (d1.amps[m].real() * d1.amps[mp].real() * el).real();
      cross += d.amps[m].real() * d1.amps[mp].real() * el;
    }
  }
  return assemble(dd, d1d1, cross.imag());
}

double delta_s_empirical(const SpinLattice& lat, const Couplings& c, double t, double T2,
                         double T_total) {
  if (t <= 0.0) throw std::invalid_argument("delta_s_empirical: t must be positive");
  const double N = T_total / t;
  if (N < 1.0) throw std::invalid_argument("delta_s_empirical: T/t must be at least 1");

  const double h = 1e-4;
  Couplings cp = c, cm = c;
  cp.s = c.s + h;
  cm.s = c.s - h;
  const double pp = exact_p(make_channel(lat, cp, t, T2)).p;
  const double pm = exact_p(make_channel(lat, cm, t, T2)).p;
  const double dpds = (pp - pm) / (2.0 * h);
  if (std::abs(dpds) < 1e-300) return std::numeric_limits<double>::infinity();

  const double p = exact_p(make_channel(lat, c, t, T2)).p;
  return std::sqrt(p * (1.0 - p)) / (std::sqrt(N) * std::abs(dpds));
}

}  // namespace dickesim
