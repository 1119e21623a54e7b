#pragma once

#include <Eigen/Dense>

namespace dickesim {

// Chain of L three-level spins with site basis {B, 0, D}; the balanced
// permutation state over {B, D} never occupies the 0 level.
struct QutritChainState {
  int L = 0;
  Eigen::VectorXcd amps;  // dimension 3^L
};

inline constexpr int kQutritChainCap = 6;

QutritChainState qutrit_bd_dicke(int L);

// Exchange coupling sum_{j,k} g1(j,k) (|B0><0B| + |0B><B0| + |D0><0D| + |0D><D0|)
// applied to a state.  It moves population through the 0 level only.
Eigen::VectorXcd apply_exchange_coupling(const QutritChainState& st,
                                         const Eigen::MatrixXd& g1);

// Diagonal coupling sum_{j,k} g2(j,k) (|BD><BD| + |DB><DB|).
Eigen::VectorXcd apply_zz_coupling(const QutritChainState& st, const Eigen::MatrixXd& g2);

struct InvarianceReport {
  double exchange_norm = 0.0;  // ||H' |D>||
  double zz_eigenvalue = 0.0;  // Rayleigh quotient <D|H''|D>
  double zz_residual = 0.0;    // ||H''|D> - <D|H''|D> |D>||
};

// Checks that the exchange part annihilates the balanced B/D state for
// any couplings, and reports how far the state is from an eigenvector
// of the diagonal part for the given g2.
InvarianceReport nv_invariance_check(int L, const Eigen::MatrixXd& g1,
                                     const Eigen::MatrixXd& g2);

}  // namespace dickesim
