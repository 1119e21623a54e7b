#include "dickesim/nv_chain.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace dickesim {

namespace {

enum Level : int { kB = 0, kZero = 1, kD = 2 };

int pow3(int n) {
  int r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

void check_L(int L, const char* who) {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": L must be even and >= 2");
  if (L > kQutritChainCap)
    throw std::length_error(std::string(who) + ": 3^L blow-up, L capped at 6");
}

std::array<int, 8> decode(int idx, int L) {
  std::array<int, 8> lv{};
  for (int i = 0; i < L; ++i) {
    lv[i] = idx % 3;
    idx /= 3;
  }
  return lv;
}

}  // namespace

QutritChainState qutrit_bd_dicke(int L) {
  check_L(L, "qutrit_bd_dicke");
  QutritChainState st;
  st.L = L;
  const int dim = pow3(L);
  st.amps = Eigen::VectorXcd::Zero(dim);
  int terms = 0;
  for (int idx = 0; idx < dim; ++idx) {
    const auto lv = decode(idx, L);
    int nb = 0, nz = 0;
    for (int i = 0; i < L; ++i) {
      if (lv[i] == kB) ++nb;
      if (lv[i] == kZero) ++nz;
    }
    if (nz == 0 && nb == L / 2) {
      st.amps[idx] = 1.0;
      ++terms;
    }
  }
  st.amps /= std::sqrt(static_cast<double>(terms));
  return st;
}

Eigen::VectorXcd apply_exchange_coupling(const QutritChainState& st,
                                         const Eigen::MatrixXd& g1) {
  check_L(st.L, "apply_exchange_coupling");
  const int L = st.L;
  const int dim = pow3(L);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  std::array<int, 8> p3{};
  for (int i = 0; i < L; ++i) p3[i] = pow3(i);

  for (int idx = 0; idx < dim; ++idx) {
    if (st.amps[idx] == 0.0) continue;
    const auto lv = decode(idx, L);
    for (int j = 0; j < L; ++j) {
      for (int k = 0; k < L; ++k) {
        if (j == k) continue;
        const double g = g1(j, k);
        if (g == 0.0) continue;
        // |X 0><0 X| and |0 X><X 0| at sites (j, k), X in {B, D}
        for (int X : {kB, kD}) {
          if (lv[j] == kZero && lv[k] == X) {
            const int tgt = idx + (X - kZero) * p3[j] + (kZero - X) * p3[k];
            out[tgt] += g * st.amps[idx];
          }
          if (lv[j] == X && lv[k] == kZero) {
            const int tgt = idx + (kZero - X) * p3[j] + (X - kZero) * p3[k];
            out[tgt] += g * st.amps[idx];
          }
        }
      }
    }
  }
  return out;
}

Eigen::VectorXcd apply_zz_coupling(const QutritChainState& st, const Eigen::MatrixXd& g2) {
  check_L(st.L, "apply_zz_coupling");
  const int L = st.L;
  const int dim = pow3(L);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (int idx = 0; idx < dim; ++idx) {
    if (st.amps[idx] == 0.0) continue;
    const auto lv = decode(idx, L);
    double lam = 0.0;
    for (int j = 0; j < L; ++j) {
      for (int k = 0; k < L; ++k) {
        if (j == k) continue;
        if ((lv[j] == kB && lv[k] == kD) || (lv[j] == kD && lv[k] == kB)) lam += g2(j, k);
      }
    }
    out[idx] = lam * st.amps[idx];
  }
  return out;
}

InvarianceReport nv_invariance_check(int L, const Eigen::MatrixXd& g1,
                                     const Eigen::MatrixXd& g2) {
  const QutritChainState d = qutrit_bd_dicke(L);
  InvarianceReport rep;
  rep.exchange_norm = apply_exchange_coupling(d, g1).norm();
  const Eigen::VectorXcd hv = apply_zz_coupling(d, g2);
  rep.zz_eigenvalue = d.amps.dot(hv).real();
  rep.zz_residual = (hv - rep.zz_eigenvalue * d.amps).norm();
  return rep;
}

}  // namespace dickesim
