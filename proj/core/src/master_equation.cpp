#include "dickesim/master_equation.hpp"

#include <bit>
#include <stdexcept>

namespace dickesim {

namespace {

Eigen::MatrixXcd rk4_run(const Eigen::MatrixXcd& phase_gen, const Eigen::MatrixXd& damp_gen,
                         const Eigen::MatrixXcd& rho0, double t, int steps) {
  // d rho / dt = (phase_gen - tau * damp_gen) .* rho   (elementwise)
  Eigen::MatrixXcd rho = rho0;
  const double h = t / steps;
  auto rhs = [&](double tau, const Eigen::MatrixXcd& r) -> Eigen::MatrixXcd {
    return (phase_gen.array() - tau * damp_gen.array()).matrix().cwiseProduct(r);
  };
  for (int s = 0; s < steps; ++s) {
    const double tau = s * h;
    const Eigen::MatrixXcd k1 = rhs(tau, rho);
    const Eigen::MatrixXcd k2 = rhs(tau + 0.5 * h, rho + 0.5 * h * k1);
    const Eigen::MatrixXcd k3 = rhs(tau + 0.5 * h, rho + 0.5 * h * k2);
    const Eigen::MatrixXcd k4 = rhs(tau + h, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

}  // namespace

MasterEqSolution integrate_master_equation(const std::vector<double>& fields, double T2,
                                           double t, int steps, const StateVector& init) {
  const int L = static_cast<int>(fields.size());
  if (L < 1 || L > 6) throw std::length_error("integrate_master_equation: need 1 <= L <= 6");
  if (init.num_qubits != L)
    throw std::invalid_argument("integrate_master_equation: init size mismatch");
  if (steps < 1) throw std::invalid_argument("integrate_master_equation: steps < 1");
  const int dim = 1 << L;

  Eigen::VectorXd energy = Eigen::VectorXd::Zero(dim);
  for (int n = 0; n < L; ++n) {
    for (int m = 0; m < dim; ++m) {
      energy[m] += 0.5 * fields[n] * (((m >> n) & 1) ? -1.0 : 1.0);
    }
  }

  // i[H, rho]_{mm'} = i (E_m - E_m') rho_{mm'};
  // the dephasing generator scales each element by 2 * hamming(m,m') / T2^2.
  Eigen::MatrixXcd phase_gen(dim, dim);
  Eigen::MatrixXd damp_gen(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int mp = 0; mp < dim; ++mp) {
      phase_gen(m, mp) = std::complex<double>(0.0, energy[m] - energy[mp]);
      damp_gen(m, mp) = 2.0 * std::popcount(static_cast<unsigned>(m ^ mp)) / (T2 * T2);
    }
  }

  Eigen::MatrixXcd rho0(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int mp = 0; mp < dim; ++mp) {
      rho0(m, mp) = init.amps[m] * std::conj(init.amps[mp]);
    }
  }

  const Eigen::MatrixXcd coarse = rk4_run(phase_gen, damp_gen, rho0, t, steps);
  const Eigen::MatrixXcd fine = rk4_run(phase_gen, damp_gen, rho0, t, 2 * steps);

  MasterEqSolution out;
  out.rho = fine;
  out.richardson_error = (coarse - fine).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace dickesim
