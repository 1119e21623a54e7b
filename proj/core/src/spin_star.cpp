#include "dickesim/spin_star.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dickesim/binomial.hpp"
#include "dickesim/constants.hpp"
#include "dickesim/optimize.hpp"

namespace dickesim {

using constants::pi;

LadderState LadderState::ground(int L) {
  LadderState st;
  st.L = L;
  st.amps = Eigen::VectorXcd::Zero(2 * (L + 1));
  st.amps[ladder_index(L, 0, 0)] = 1.0;
  return st;
}

Eigen::MatrixXd ladder_jplus(int L) {
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(L + 1, L + 1);
  for (int k = 0; k < L; ++k) jp(k + 1, k) = std::sqrt(double(k + 1) * (L - k));
  return jp;
}

Eigen::MatrixXcd ladder_jy(int L) {
  const Eigen::MatrixXd jp = ladder_jplus(L);
  return (jp - jp.transpose()).cast<std::complex<double>>() / std::complex<double>(0.0, 2.0);
}

namespace {

void check_even(int L, const char* who) {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": L must be even and >= 2");
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd ph(w.size());
  for (int i = 0; i < w.size(); ++i) ph[i] = std::polar(1.0, -w[i] * t);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Rotating-frame flip-flop coupling lambda (s+_A J- + s-_A J+).
Eigen::MatrixXcd flip_flop(int L, double lambda) {
  const int dim = 2 * (L + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < L; ++k) {
    const double g = lambda * std::sqrt(double(k + 1) * (L - k));
    h(ladder_index(L, 1, k), ladder_index(L, 0, k + 1)) = g;
    h(ladder_index(L, 0, k + 1), ladder_index(L, 1, k)) = g;
  }
  return h;
}

// Instantaneous ancilla pi rotation about y: |0> -> |1>, |1> -> -|0>.
void apply_ideal_pi(LadderState& st) {
  const int L = st.L;
  for (int k = 0; k <= L; ++k) {
    const auto a0 = st.amps[ladder_index(L, 0, k)];
    const auto a1 = st.amps[ladder_index(L, 1, k)];
    st.amps[ladder_index(L, 0, k)] = -a1;
    st.amps[ladder_index(L, 1, k)] = a0;
  }
}

Eigen::MatrixXcd ideal_pi_matrix(int L) {
  const int dim = 2 * (L + 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k <= L; ++k) {
    u(ladder_index(L, 1, k), ladder_index(L, 0, k)) = 1.0;
    u(ladder_index(L, 0, k), ladder_index(L, 1, k)) = -1.0;
  }
  return u;
}

// Square ancilla pulse about y with the flip-flop coupling retained.
Eigen::MatrixXcd hard_pi_matrix(int L, const StarParams& p) {
  if (!(p.lambda_d > 0.0))
    throw std::invalid_argument("prepare_dicke: lambda_d must be positive for square pulses");
  Eigen::MatrixXcd h = flip_flop(L, p.lambda);
  // sigma_y on the ancilla: <1| sy |0> = i
  for (int k = 0; k <= L; ++k) {
    h(ladder_index(L, 1, k), ladder_index(L, 0, k)) += std::complex<double>(0.0, 0.5 * p.lambda_d);
    h(ladder_index(L, 0, k), ladder_index(L, 1, k)) += std::complex<double>(0.0, -0.5 * p.lambda_d);
  }
  return expm_hermitian(h, pi / p.lambda_d);
}

// Collective pi/2 rotation about y on the probe ladder, ancilla untouched.
Eigen::MatrixXcd collective_half_pi(int L) {
  const Eigen::MatrixXcd r = expm_hermitian(ladder_jy(L), pi / 2.0);
  const int dim = 2 * (L + 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  u.block(0, 0, L + 1, L + 1) = r;
  u.block(L + 1, L + 1, L + 1, L + 1) = r;
  return u;
}

double dispersive_shift(int L, const StarParams& p) {
  const double det = p.omega_A - p.omega_P;
  if (std::abs(det) < 20.0 * p.lambda * std::sqrt(double(L)))
    throw std::domain_error("dispersive regime violated: |omega_A - omega_P| < 20 lambda sqrt(L)");
  return p.lambda * p.lambda / det;
}

// Soft-pulse generator in the rotating frame of the probe drive.
Eigen::MatrixXcd soft_pulse_hamiltonian(int L, const StarParams& p) {
  const double chi = dispersive_shift(L, p);
  if (!(p.lambda_dp > 0.0))
    throw std::invalid_argument("soft_pulse: lambda_dp must be positive");
  // guard against grossly non-selective drives; leakage studies sweep
  // amplitude ratios down from 1/10 of the level splitting 2 chi
  if (p.lambda_dp > 0.25 * 2.0 * std::abs(chi))
    throw std::domain_error("soft pulse selectivity violated: lambda_dp > (2 chi)/4");
  const int dim = 2 * (L + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::MatrixXd jp = ladder_jplus(L);
  for (int a = 0; a <= 1; ++a) {
    const double sz = (a == 1) ? 1.0 : -1.0;
    for (int k = 0; k <= L; ++k) {
      const double m = k - 0.5 * L;
      h(ladder_index(L, a, k), ladder_index(L, a, k)) =
          (p.omega_P - p.omega_dp) * m - chi * sz * m * m;
    }
    for (int k = 0; k < L; ++k) {
      const double g = 0.5 * p.lambda_dp * 0.5 * jp(k + 1, k);
      h(ladder_index(L, a, k + 1), ladder_index(L, a, k)) += g;
      h(ladder_index(L, a, k), ladder_index(L, a, k + 1)) += g;
    }
  }
  return h;
}

}  // namespace

Eigen::MatrixXcd star_hamiltonian(int L, const StarParams& p, bool resonant) {
  check_even(L, "star_hamiltonian");
  const double omega_a = resonant ? p.omega_P : p.omega_A;
  Eigen::MatrixXcd h = flip_flop(L, p.lambda);
  for (int a = 0; a <= 1; ++a) {
    for (int k = 0; k <= L; ++k) {
      h(ladder_index(L, a, k), ladder_index(L, a, k)) =
          p.omega_P * (k - 0.5 * L) + omega_a * (a - 0.5);
    }
  }
  return h;
}

double transfer_time(int k, int L, double lambda) {
  // defined for any adjacent block |1,k> <-> |0,k+1>; the preparation
  // sequence only uses k < L/2
  if (k < 0 || k >= L) throw std::invalid_argument("transfer_time: k out of [0, L)");
  if (!(lambda > 0.0)) throw std::invalid_argument("transfer_time: lambda must be positive");
  return pi / (2.0 * lambda * std::sqrt(double(k + 1) * (L - k)));
}

void write_schedule_csv(std::ostream& os, const PulseSchedule& schedule) {
  os << "stage,type,duration_s,frequency_rad_s,amplitude_rad_s\n";
  os.precision(17);
  for (const auto& e : schedule) {
    os << e.stage << ',' << e.type << ',' << e.duration_s << ',' << e.frequency_rad_s << ','
       << e.amplitude_rad_s << '\n';
  }
}

PrepResult prepare_dicke(int L, const StarParams& p, bool ideal_pulses) {
  check_even(L, "prepare_dicke");
  if (!(p.lambda > 0.0)) throw std::invalid_argument("prepare_dicke: lambda must be positive");

  PrepResult out;
  LadderState st = LadderState::ground(L);
  const Eigen::MatrixXcd ff = flip_flop(L, p.lambda);
  const Eigen::MatrixXcd pulse =
      ideal_pulses ? Eigen::MatrixXcd() : hard_pi_matrix(L, p);

  for (int m = 0; m < L / 2; ++m) {
    if (ideal_pulses) {
      apply_ideal_pi(st);
    } else {
      st.amps = pulse * st.amps;
    }
    out.schedule.push_back({"preparation", "hard_pi_ancilla",
                            ideal_pulses ? 0.0 : pi / p.lambda_d, p.omega_d, p.lambda_d});
    const double tm = transfer_time(m, L, p.lambda);
    st.amps = expm_hermitian(ff, tm) * st.amps;
    out.schedule.push_back({"preparation", "flip_flop_evolution", tm, 0.0, 0.0});
  }

  out.fidelity_z = std::norm(st.amps[ladder_index(L, 0, L / 2)]);

  st.amps = collective_half_pi(L) * st.amps;
  out.schedule.push_back({"preparation", "hard_half_pi_collective",
                          ideal_pulses ? 0.0 : pi / p.lambda_dp, p.omega_dp, p.lambda_dp});

  // x-basis target: the same collective rotation applied to |0, D_{L/2}>
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(2 * (L + 1));
  target[ladder_index(L, 0, L / 2)] = 1.0;
  target = collective_half_pi(L) * target;
  out.fidelity_x = std::norm(target.dot(st.amps));
  out.state = std::move(st);
  return out;
}

Eigen::MatrixXcd dispersive_hamiltonian(int L, const StarParams& p) {
  check_even(L, "dispersive_hamiltonian");
  const double chi = dispersive_shift(L, p);
  const int dim = 2 * (L + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a <= 1; ++a) {
    const double sz = (a == 1) ? 1.0 : -1.0;
    for (int k = 0; k <= L; ++k) {
      const double m = k - 0.5 * L;
      h(ladder_index(L, a, k), ladder_index(L, a, k)) =
          p.omega_P * m + 0.5 * p.omega_A * sz - chi * sz * m * m;
    }
  }
  return h;
}

LadderState soft_pulse(const LadderState& state, const StarParams& p, double duration) {
  if (duration < 0.0) throw std::invalid_argument("soft_pulse: negative duration");
  LadderState out = state;
  if (duration == 0.0) return out;
  const Eigen::MatrixXcd h = soft_pulse_hamiltonian(state.L, p);
  out.amps = expm_hermitian(h, duration) * out.amps;
  return out;
}

double calibrate_soft_pulse_duration(int L, const StarParams& p) {
  check_even(L, "calibrate_soft_pulse_duration");
  const int half = L / 2;
  const double elem = std::sqrt(double(half + 1) * (L - half));  // <L/2+1|Jp|L/2>
  const double g = 0.25 * p.lambda_dp * elem;
  const double tau0 = pi / (4.0 * g);

  LadderState start = LadderState::ground(L);
  start.amps.setZero();
  start.amps[ladder_index(L, 0, half)] = 1.0;

  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(2 * (L + 1));
  target[ladder_index(L, 0, half)] = 1.0 / std::sqrt(2.0);
  target[ladder_index(L, 0, half + 1)] = std::complex<double>(0.0, -1.0) / std::sqrt(2.0);

  const Eigen::MatrixXcd h = soft_pulse_hamiltonian(L, p);
  auto infidelity = [&](double tau) {
    const Eigen::VectorXcd psi = expm_hermitian(h, tau) * start.amps;
    return 1.0 - std::norm(target.dot(psi));
  };
  return minimize_scalar(infidelity, 0.5 * tau0, 1.5 * tau0, 1e-6 * tau0).x;
}

LadderState ladder_read_target(int L) {
  check_even(L, "ladder_read_target");
  LadderState st;
  st.L = L;
  st.amps = Eigen::VectorXcd::Zero(2 * (L + 1));
  st.amps[ladder_index(L, 0, L / 2)] = 1.0 / std::sqrt(2.0);
  st.amps[ladder_index(L, 0, L / 2 + 1)] = std::complex<double>(0.0, -1.0) / std::sqrt(2.0);
  st.amps = collective_half_pi(L) * st.amps;
  return st;
}

ReadoutResult build_u_read(int L, const StarParams& p, bool ideal) {
  check_even(L, "build_u_read");
  ReadoutResult out;
  const int dim = 2 * (L + 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);

  const Eigen::MatrixXcd ff = flip_flop(L, p.lambda);
  const Eigen::MatrixXcd pulse = ideal ? ideal_pi_matrix(L) : hard_pi_matrix(L, p);
  for (int m = 0; m < L / 2; ++m) {
    u = pulse * u;
    out.schedule.push_back({"readout", "hard_pi_ancilla", ideal ? 0.0 : pi / p.lambda_d,
                            p.omega_d, p.lambda_d});
    const double tm = transfer_time(m, L, p.lambda);
    u = expm_hermitian(ff, tm) * u;
    out.schedule.push_back({"readout", "flip_flop_evolution", tm, 0.0, 0.0});
  }

  if (ideal) {
    // exact selective half-pi rotation on the {L/2, L/2+1} pair
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(dim, dim);
    const int i0 = ladder_index(L, 0, L / 2);
    const int i1 = ladder_index(L, 0, L / 2 + 1);
    const double c = 1.0 / std::sqrt(2.0);
    s(i0, i0) = c;
    s(i1, i1) = c;
    s(i0, i1) = std::complex<double>(0.0, -c);
    s(i1, i0) = std::complex<double>(0.0, -c);
    u = s * u;
    out.schedule.push_back({"readout", "soft_half_pi_collective", 0.0, p.omega_dp, p.lambda_dp});
  } else {
    const double tau = calibrate_soft_pulse_duration(L, p);
    u = expm_hermitian(soft_pulse_hamiltonian(L, p), tau) * u;
    out.schedule.push_back({"readout", "soft_half_pi_collective", tau, p.omega_dp, p.lambda_dp});
  }

  u = collective_half_pi(L) * u;
  out.schedule.push_back({"readout", "hard_half_pi_collective",
                          ideal ? 0.0 : pi / p.lambda_dp, p.omega_dp, p.lambda_dp});

  const LadderState target = ladder_read_target(L);
  const Eigen::VectorXcd final_state = u * LadderState::ground(L).amps;
  out.fidelity = std::norm(target.amps.dot(final_state));
  out.u_read = std::move(u);
  return out;
}

StateVector embed_probe_sector(const LadderState& st) {
  const int L = st.L;
  if (L > kDefaultDenseCap) throw std::length_error("embed_probe_sector: L exceeds dense cap");
  StateVector v;
  v.num_qubits = L;
  const std::size_t dim = std::size_t{1} << L;
  v.amps.assign(dim, 0.0);
  // |D_k>_z spreads over bitstrings with L-k set bits (up spin = bit 0)
  std::vector<std::complex<double>> by_pop(L + 1);
  for (int k = 0; k <= L; ++k) {
    by_pop[L - k] = st.amps[ladder_index(L, 0, k)] / std::sqrt(binom(L, k));
  }
  for (std::size_t m = 0; m < dim; ++m) v.amps[m] = by_pop[std::popcount(m)];
  return v;
}

}  // namespace dickesim
