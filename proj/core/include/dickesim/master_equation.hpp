#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dickesim/dicke.hpp"

namespace dickesim {

struct MasterEqSolution {
  Eigen::MatrixXcd rho;
  double richardson_error = 0.0;  // max |rho(steps) - rho(2*steps)|
};

// Fixed-step RK4 integration of the dephasing master equation
//   d rho / dt = i [H, rho] - (t / T2^2) sum_j (rho - sz_j rho sz_j),
//   H = sum_j (fields[j] / 2) sz_j,
// from rho(0) = |init><init|.  The commutator sign is the one whose
// closed-form solution is rho_element().  Dense matrices, so L <= 6.
// The result is the 2*steps run; richardson_error flags an
// insufficient step count when it exceeds the target accuracy.
MasterEqSolution integrate_master_equation(const std::vector<double>& fields, double T2,
                                           double t, int steps, const StateVector& init);

}  // namespace dickesim
