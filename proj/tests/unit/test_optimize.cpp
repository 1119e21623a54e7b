#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "dickesim/geometry.hpp"
#include "dickesim/optimize.hpp"
#include "dickesim/sensitivity.hpp"

using namespace dickesim;

TEST_CASE("scalar minimizer on smooth unimodal objectives") {
  const Optimum1D a = minimize_scalar([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 5.0);
  CHECK(a.x == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(a.evaluations > 0);
  const Optimum1D b = minimize_scalar([](double x) { return std::cosh(x); }, -1.0, 1.0);
  CHECK(std::abs(b.x) < 1e-7);
  CHECK(b.value == doctest::Approx(1.0));
}

TEST_CASE("scalar minimizer never beats the endpoints on unimodal input") {
  auto f = [](double x) { return std::pow(x - 0.3, 4) + 0.1 * x; };
  const Optimum1D r = minimize_scalar(f, -2.0, 2.0);
  CHECK(r.value <= f(-2.0));
  CHECK(r.value <= f(2.0));
}

TEST_CASE("scalar minimizer flags non-finite objectives") {
  CHECK_THROWS_AS(minimize_scalar([](double x) { return std::log(x); }, -1.0, 1.0),
                  std::runtime_error);
}

TEST_CASE("published time optimum through the squared-variable objective") {
  const Optimum1D r = minimize_scalar(
      [](double v) { return sensitivity_F(std::sqrt(v)); }, 0.01, 5.0, 1e-9);
  CHECK(r.x == doctest::Approx(0.357).epsilon(0.002 / 0.357));
  CHECK(r.value == doctest::Approx(3.35).epsilon(0.01 / 3.35));
}

TEST_CASE("simplex minimizer on a shifted paraboloid") {
  const Optimum2D r = minimize_2d(
      [](double x, double y) { return (x - 1.0) * (x - 1.0) + (y - 3.0) * (y - 3.0); },
      {0.5, 2.0}, 1e-9, 1);
  CHECK(r.point[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.point[1] == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(r.evaluations > 0);
}

TEST_CASE("shape-factor optima match the published minima") {
  const Optimum2D f = minimize_2d([](double rt, double zt) { return shape_f(rt, zt); },
                                  {1.5, 3.0}, 1e-9, 8);
  CHECK(f.point[0] == doctest::Approx(1.87).epsilon(0.02 / 1.87));
  CHECK(f.point[1] == doctest::Approx(4.30).epsilon(0.05 / 4.30));
  CHECK(f.value == doctest::Approx(4.14).epsilon(0.01 / 4.14));

  const Optimum2D g = minimize_2d([](double rt, double zt) { return shape_g(rt, zt); },
                                  {1.0, 2.0}, 1e-9, 8);
  CHECK(g.point[0] == doctest::Approx(0.928).epsilon(0.01 / 0.928));
  CHECK(g.point[1] == doctest::Approx(1.89).epsilon(0.02 / 1.89));
  CHECK(g.value == doctest::Approx(5.32).epsilon(0.01 / 5.32));
}

TEST_CASE("multistart never reports worse than the plain run") {
  auto f = [](double x, double y) { return shape_f(x, y); };
  const Optimum2D plain = minimize_2d(f, {10.0, 40.0}, 1e-8, 1);
  const Optimum2D multi = minimize_2d(f, {10.0, 40.0}, 1e-8, 8);
  CHECK(multi.value <= plain.value + 1e-12);
}

TEST_CASE("tightening the tolerance moves the result by less than the coarse tolerance") {
  auto f = [](double v) { return sensitivity_F(std::sqrt(v)); };
  const Optimum1D coarse = minimize_scalar(f, 0.01, 5.0, 1e-4);
  const Optimum1D fine = minimize_scalar(f, 0.01, 5.0, 1e-5);
  CHECK(std::abs(coarse.x - fine.x) < 1e-4);

  const Optimum2D c2 = minimize_2d([](double x, double y) { return shape_f(x, y); },
                                   {1.5, 3.0}, 1e-5, 1);
  const Optimum2D f2 = minimize_2d([](double x, double y) { return shape_f(x, y); },
                                   {1.5, 3.0}, 1e-6, 1);
  CHECK(std::hypot(c2.point[0] - f2.point[0], c2.point[1] - f2.point[1]) < 1e-3);
}

TEST_CASE("composed optimum product lands at the published prefactor") {
  const ModelOptima& o = model_optima();
  CHECK(o.F_min * o.f_min == doctest::Approx(13.87).epsilon(0.1 / 13.87));
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(minimize_2d([](double, double) { return 0.0; }, {-1.0, 2.0}, 1e-6, 1),
                  std::domain_error);
  CHECK_THROWS_AS(minimize_scalar([](double x) { return x; }, 1.0, 0.0), std::invalid_argument);
}
