#include <doctest.h>

#include <stdexcept>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "dickesim/bessel.hpp"
#include "dickesim/evolution.hpp"
#include "dickesim/master_equation.hpp"
#include "dickesim/sensitivity.hpp"

using namespace dickesim;

namespace {

DephasingChannel channel_with(std::vector<double> fields, double t, double T2) {
  DephasingChannel ch;
  ch.T2 = T2;
  ch.t = t;
  ch.fields = std::move(fields);
  return ch;
}

SpinLattice unit_shell_lattice(int L, std::uint64_t seed, double g_scale = 1.0) {
  const Geometry g{1.0, 1.0, 2.0};
  Couplings c;
  c.G *= g_scale;
  const double pi = constants::pi;
  return generate_lattice(g, double(L) / pi * 1e12, LatticeMode::UniformRandom, c, seed);
}

}  // namespace

TEST_CASE("rho element: populations, t = 0, and the L=2 coherence phase") {
  const StateVector d = dicke_x(2, 1);
  const DephasingChannel ch0 = channel_with({0.7, -1.3}, 0.0, 1.0);
  for (std::uint64_t m = 0; m < 4; ++m) {
    CHECK(rho_element(m, m, ch0, d).real() ==
          doctest::Approx(std::norm(d.amps[m])).epsilon(1e-14));
    for (std::uint64_t mp = 0; mp < 4; ++mp) {
      CHECK(std::abs(rho_element(m, mp, ch0, d) - d.amps[m] * std::conj(d.amps[mp])) < 1e-14);
    }
  }
  // populations keep their modulus at any t under pure dephasing
  const DephasingChannel ch = channel_with({0.7, -1.3}, 0.9, 1.0);
  for (std::uint64_t m = 0; m < 4; ++m) {
    CHECK(std::abs(rho_element(m, m, ch, d)) ==
          doctest::Approx(std::norm(d.amps[m])).epsilon(1e-14));
  }
  // |00><11| coherence: phase factor e^{i(w1+w2)t}, damping e^{-2(t/T2)^2}
  const double w1 = 0.7, w2 = -1.3, t = 0.9;
  const auto el = rho_element(0b00, 0b11, ch, d);
  const auto expect = d.amps[0] * std::conj(d.amps[3]) *
                      std::polar(std::exp(-2.0 * t * t), (w1 + w2) * t);
  CHECK(std::abs(el - expect) < 1e-14);
}

TEST_CASE("rho element matches the RK4 master-equation solution elementwise") {
  const int L = 4;
  const SpinLattice lat = unit_shell_lattice(L, 42);
  const Couplings c;
  const double T2 = 1.0, t = 0.35;
  const DephasingChannel ch = make_channel(lat, c, t, T2);
  const StateVector init = dicke_x(L, L / 2);
  const MasterEqSolution sol = integrate_master_equation(ch.fields, T2, t, 400, init);
  CHECK(sol.richardson_error < 1e-8);
  for (std::uint64_t m = 0; m < 16; ++m) {
    for (std::uint64_t mp = 0; mp < 16; ++mp) {
      CHECK(std::abs(sol.rho(m, mp) - rho_element(m, mp, ch, init)) < 1e-8);
    }
  }
}

TEST_CASE("rho element rejects mismatched lengths") {
  const DephasingChannel ch = channel_with({0.1, 0.2, 0.3}, 0.1, 1.0);
  CHECK_THROWS_AS(rho_element(0, 1, ch, dicke_x(2, 1)), std::invalid_argument);
}

TEST_CASE("exact p: reduced and direct routes coincide") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 0.6);
  for (int L : {2, 4, 6, 8}) {
    DephasingChannel ch;
    ch.T2 = 1.0;
    ch.t = 0.4;
    for (int j = 0; j < L; ++j) ch.fields.push_back(gauss(rng));
    const ProbabilityTerms a = exact_p(ch);
    const ProbabilityTerms b = exact_p_direct(ch);
    CHECK(a.p == doctest::Approx(b.p).epsilon(1e-12));
    CHECK(a.term_dd == doctest::Approx(b.term_dd).epsilon(1e-12));
    CHECK(a.term_d1d1 == doctest::Approx(b.term_d1d1).epsilon(1e-12));
    CHECK(a.term_cross == doctest::Approx(b.term_cross).epsilon(1e-10));
  }
}

TEST_CASE("exact p at t = 0 is exactly one half") {
  for (int L : {2, 4, 6, 8, 10}) {
    const DephasingChannel ch = channel_with(std::vector<double>(L, 0.9), 0.0, 1.0);
    const ProbabilityTerms pt = exact_p(ch);
    CHECK(pt.p == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pt.term_dd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pt.term_d1d1 == doctest::Approx(0.0));
    CHECK(pt.term_cross == doctest::Approx(0.0));
  }
}

TEST_CASE("probability decomposition invariant and bounds") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int iter = 0; iter < 10; ++iter) {
    const int L = 2 * (1 + int(rng() % 5));
    DephasingChannel ch;
    ch.T2 = 1.0;
    ch.t = 0.05 + 0.2 * (rng() % 8);
    for (int j = 0; j < L; ++j) ch.fields.push_back(gauss(rng));
    const ProbabilityTerms pt = exact_p(ch);
    CHECK(pt.p ==
          doctest::Approx(0.5 * pt.term_dd + 0.5 * pt.term_d1d1 - pt.term_cross).epsilon(1e-12));
    CHECK(pt.p >= -1e-10);
    CHECK(pt.p <= 1.0 + 1e-10);
  }
}

TEST_CASE("no field: cross term vanishes and the dephased limit is the diagonal sum") {
  const int L = 6;
  for (double t : {0.1, 0.5, 2.0}) {
    const ProbabilityTerms pt = exact_p(channel_with(std::vector<double>(L, 0.0), t, 1.0));
    CHECK(pt.term_cross == doctest::Approx(0.0));
  }
  // diagonal-ensemble oracle: p_inf = sum_m |Read_m|^2 |D_m|^2
  const StateVector d = dicke_x(L, L / 2);
  const StateVector r = read_state(L);
  double p_inf = 0.0;
  for (std::size_t m = 0; m < d.amps.size(); ++m) {
    p_inf += std::norm(r.amps[m]) * std::norm(d.amps[m]);
  }
  const ProbabilityTerms late = exact_p(channel_with(std::vector<double>(L, 0.0), 50.0, 1.0));
  CHECK(late.p == doctest::Approx(p_inf).epsilon(1e-12));
}

TEST_CASE("p depends on the field multiset only") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 0.8);
  std::vector<double> fields(8);
  for (auto& f : fields) f = gauss(rng);
  const double p0 = exact_p(channel_with(fields, 0.3, 1.0)).p;
  for (int shuffle = 0; shuffle < 5; ++shuffle) {
    std::shuffle(fields.begin(), fields.end(), rng);
    CHECK(exact_p(channel_with(fields, 0.3, 1.0)).p == doctest::Approx(p0).epsilon(1e-12));
  }
}

TEST_CASE("parity in s: cross term odd, populations even to first order") {
  const int L = 8;
  const SpinLattice lat = unit_shell_lattice(L, 5, 1e-4);
  const double t = 0.357 / std::sqrt(double(L));
  Couplings up, dn;
  up.G *= 1e-4;
  dn.G *= 1e-4;
  up.s = 1.0;
  dn.s = -1.0;
  const ProbabilityTerms a = exact_p(make_channel(lat, up, t, 1.0));
  const ProbabilityTerms b = exact_p(make_channel(lat, dn, t, 1.0));
  CHECK(a.term_cross == doctest::Approx(-b.term_cross).epsilon(1e-9));
  // populations differ only at second order in the small fields
  CHECK(std::abs(a.term_dd - b.term_dd) < 1e-9);
  CHECK(std::abs(a.term_d1d1 - b.term_d1d1) < 1e-9);
}

TEST_CASE("exact p against the RK4 readout expectation at small L") {
  std::mt19937_64 rng(7);
  for (int L : {2, 4, 6}) {
    const SpinLattice lat = unit_shell_lattice(L, rng());
    const Couplings c;
    const double T2 = 1.0;
    for (double t : {0.1, 0.45}) {
      const DephasingChannel ch = make_channel(lat, c, t, T2);
      const ProbabilityTerms pt = exact_p(ch);
      const StateVector init = dicke_x(L, L / 2);
      const MasterEqSolution sol = integrate_master_equation(ch.fields, T2, t, 600, init);
      const StateVector r = read_state(L);
      std::complex<double> p_rk = 0.0;
      const std::size_t dim = std::size_t{1} << L;
      for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t mp = 0; mp < dim; ++mp) {
          p_rk += std::conj(r.amps[m]) * sol.rho(m, mp) * r.amps[mp];
        }
      }
      CHECK(pt.p == doctest::Approx(p_rk.real()).epsilon(1e-8));
    }
  }
}

TEST_CASE("capacity and parity guards") {
  CHECK_THROWS_AS(exact_p(channel_with(std::vector<double>(3, 0.0), 0.1, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_p(channel_with(std::vector<double>(14, 0.0), 0.1, 1.0)),
                  std::length_error);
}

TEST_CASE("master equation: trace, hermiticity, positivity") {
  const int L = 4;
  const SpinLattice lat = unit_shell_lattice(L, 77);
  const DephasingChannel ch = make_channel(lat, Couplings{}, 0.6, 1.0);
  const StateVector init = dicke_x(L, L / 2);
  const MasterEqSolution sol = integrate_master_equation(ch.fields, 1.0, 0.6, 500, init);
  CHECK(std::abs(sol.rho.trace().real() - 1.0) < 1e-10);
  CHECK(std::abs(sol.rho.trace().imag()) < 1e-12);
  CHECK((sol.rho - sol.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sol.rho);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("master equation caps and argument checks") {
  CHECK_THROWS_AS(integrate_master_equation(std::vector<double>(7, 0.0), 1.0, 0.1, 100,
                                            dicke_x(7, 3, 18)),
                  std::length_error);
  CHECK_THROWS_AS(integrate_master_equation({0.1, 0.2}, 1.0, 0.1, 0, dicke_x(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("empirical uncertainty: scaling in T and loss of signal") {
  const int L = 6;
  const SpinLattice lat = unit_shell_lattice(L, 3, 1e-3);
  Couplings c;
  c.G *= 1e-3;
  const double t = 0.357 / std::sqrt(double(L)), T2 = 1.0;
  const double d1 = delta_s_empirical(lat, c, t, T2, 100.0);
  const double d2 = delta_s_empirical(lat, c, t, T2, 200.0);
  CHECK(d2 == doctest::Approx(d1 / std::sqrt(2.0)).epsilon(1e-9));

  // a lattice generated with G = 0 carries no signal at all
  Couplings zero;
  zero.G = 0.0;
  const Geometry g{1.0, 1.0, 2.0};
  const SpinLattice dead =
      generate_lattice(g, double(L) / constants::pi * 1e12, LatticeMode::UniformRandom, zero, 3);
  CHECK(std::isinf(delta_s_empirical(dead, zero, t, T2, 100.0)));
  CHECK_THROWS_AS(delta_s_empirical(lat, c, 0.0, T2, 100.0), std::invalid_argument);
}

TEST_CASE("slope step independence: p is affine in s at the modeled order") {
  const int L = 6;
  const SpinLattice lat = unit_shell_lattice(L, 13, 1e-3);
  Couplings c;
  c.G *= 1e-3;
  const double t = 0.2, T2 = 1.0;
  auto slope_with_step = [&](double h) {
    Couplings up = c, dn = c;
    up.s += h;
    dn.s -= h;
    return (exact_p(make_channel(lat, up, t, T2)).p - exact_p(make_channel(lat, dn, t, T2)).p) /
           (2.0 * h);
  };
  CHECK(slope_with_step(1e-3) == doctest::Approx(slope_with_step(1e-5)).epsilon(1e-6));
}

TEST_CASE("small-signal slope matches the Bessel coefficient at L = 8") {
  // (p - p(0)) / (sum_omega * t) approaches (1/4) e^{-u^2/2} (I0 - I1)^2
  const int L = 8;
  const double T2 = 1.0, u = 0.357;
  const double t = u * T2 / std::sqrt(double(L));
  DephasingChannel ch;
  ch.T2 = T2;
  ch.t = t;
  double sum = 0.0;
  for (int j = 0; j < L; ++j) {
    ch.fields.push_back(2e-4 * (1.0 + 0.3 * j));
    sum += ch.fields.back();
  }
  DephasingChannel ch0 = ch;
  ch0.fields.assign(L, 0.0);
  const double slope = (exact_p(ch).p - exact_p(ch0).p) / (sum * t);
  const double a = u * u / 4.0;
  const double coeff = 0.25 * std::exp(-u * u / 2.0) *
                       std::pow(bessel_I(0, a) - bessel_I(1, a), 2);
  CHECK(std::abs(slope - coeff) / coeff < 1.0 / L);
}

TEST_CASE("signal derivative against the asymptotic model at L = 12") {
  const int L = 12;
  const double T2 = 1.0, u = 0.357;
  const double t = u * T2 / std::sqrt(double(L));
  const SpinLattice lat = unit_shell_lattice(L, 6, 1e-3);
  const Couplings c{constants::default_dipolar_G * 1e-3, 1.0};
  const DephasingChannel ch = make_channel(lat, c, t, T2);
  double sum = 0.0;
  for (double w : ch.fields) sum += w;

  const double h = 1e-3;
  DephasingChannel up = ch, dn = ch;
  for (auto& w : up.fields) w *= (1.0 + h);
  for (auto& w : dn.fields) w *= (1.0 - h);
  const double exact_slope = (exact_p(up).p - exact_p(dn).p) / (2.0 * h * sum);

  SensitivityParams p;
  p.T2 = T2;
  p.u = u;
  p.L = double(L);
  const double model_slope =
      (p_asymptotic(p, sum * (1.0 + h)) - p_asymptotic(p, sum * (1.0 - h))) / (2.0 * h * sum);
  CHECK(std::abs(exact_slope - model_slope) / std::abs(model_slope) < 0.10);
}

TEST_CASE("empirical optimum agrees with the closed-form prediction at L = 10") {
  const int L = 10;
  const SpinLattice lat = unit_shell_lattice(L, 21, 1e-3);
  Couplings c;
  c.G *= 1e-3;
  const double T2 = 1.0, T = 100.0;
  const double u = model_optima().u_min;
  const double t = u * T2 / std::sqrt(double(L));
  const double emp = delta_s_empirical(lat, c, t, T2, T);
  SensitivityParams p;
  p.T2 = T2;
  p.T = T;
  p.u = u;
  p.L = double(L);
  const double sum = sum_domega_ds(lat);  // lattice already carries the scaled G
  const double analytic = delta_s_dicke(p, sum);
  CHECK(std::abs(emp - analytic) / analytic < 0.15);
}
