#include "dickesim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dickesim {

namespace {

double checked(const std::function<double(double)>& f, double x, int& evals) {
  ++evals;
  const double v = f(x);
  if (!std::isfinite(v)) throw std::runtime_error("minimize_scalar: non-finite objective");
  return v;
}

}  // namespace

Optimum1D minimize_scalar(const std::function<double(double)>& objective, double lo,
                          double hi, double xtol) {
  if (!(lo < hi)) throw std::invalid_argument("minimize_scalar: need lo < hi");
  constexpr double golden = 0.3819660112501051;
  constexpr double eps = 1e-12;
  int evals = 0;

  double a = lo, b = hi;
  double x = a + golden * (b - a), w = x, v = x;
  double fx = checked(objective, x, evals), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (int iter = 0; iter < 200; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = xtol + eps * std::abs(x);
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;

    bool use_golden = true;
    if (std::abs(e) > tol1) {
      // parabolic fit through (v, w, x)
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        use_golden = false;
      }
    }
    if (use_golden) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }

    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = checked(objective, u, evals);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }

  Optimum1D out;
  out.x = x;
  out.value = fx;
  out.evaluations = evals;
  out.lo = lo;
  out.hi = hi;
  return out;
}

namespace {

double softplus(double a) { return a > 30.0 ? a : std::log1p(std::exp(a)); }

double softplus_inv(double y) {
  if (!(y > 0.0)) throw std::domain_error("softplus_inv: y must be positive");
  return y > 30.0 ? y : std::log(std::expm1(y));
}

struct NmResult {
  std::array<double, 2> point;
  double value;
  double spread;
  int evaluations;
};

NmResult nelder_mead(const std::function<double(const std::array<double, 2>&)>& f,
                     std::array<double, 2> start, double tol, int max_iter) {
  using Vec = std::array<double, 2>;
  int evals = 0;
  auto eval = [&](const Vec& p) {
    ++evals;
    const double v = f(p);
    return std::isfinite(v) ? v : 1e300;
  };

  std::array<Vec, 3> s{start, start, start};
  s[1][0] += (std::abs(start[0]) > 1e-8 ? 0.05 * std::abs(start[0]) : 0.05);
  s[2][1] += (std::abs(start[1]) > 1e-8 ? 0.05 * std::abs(start[1]) : 0.05);
  std::array<double, 3> fy{eval(s[0]), eval(s[1]), eval(s[2])};

  auto spread = [&]() {
    double d = 0.0;
    for (int i = 1; i < 3; ++i) {
      d = std::max(d, std::hypot(s[i][0] - s[0][0], s[i][1] - s[0][1]));
    }
    return d;
  };

  for (int it = 0; it < max_iter; ++it) {
    // order ascending
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fy[a] < fy[b]; });
    std::array<Vec, 3> ss{s[idx[0]], s[idx[1]], s[idx[2]]};
    std::array<double, 3> ff{fy[idx[0]], fy[idx[1]], fy[idx[2]]};
    s = ss;
    fy = ff;

    if (spread() < tol && std::abs(fy[2] - fy[0]) < tol * (std::abs(fy[0]) + tol)) break;

    const Vec centroid{0.5 * (s[0][0] + s[1][0]), 0.5 * (s[0][1] + s[1][1])};
    auto blend = [&](double c) {
      return Vec{centroid[0] + c * (s[2][0] - centroid[0]),
                 centroid[1] + c * (s[2][1] - centroid[1])};
    };

    const Vec xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < fy[0]) {
      const Vec xe = blend(-2.0);
      const double fe = eval(xe);
      if (fe < fr) { s[2] = xe; fy[2] = fe; } else { s[2] = xr; fy[2] = fr; }
    } else if (fr < fy[1]) {
      s[2] = xr;
      fy[2] = fr;
    } else {
      const Vec xc = blend(fr < fy[2] ? -0.5 : 0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, fy[2])) {
        s[2] = xc;
        fy[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i] = Vec{0.5 * (s[i][0] + s[0][0]), 0.5 * (s[i][1] + s[0][1])};
          fy[i] = eval(s[i]);
        }
      }
    }
  }

  std::array<int, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fy[a] < fy[b]; });
  return NmResult{s[idx[0]], fy[idx[0]], spread(), evals};
}

}  // namespace

Optimum2D minimize_2d(const std::function<double(double, double)>& objective,
                      std::array<double, 2> start, double tol, int restarts) {
  if (!(start[0] > 0.0) || !(start[1] > 1.0))
    throw std::domain_error("minimize_2d: start must satisfy x > 0, y > 1");

  auto wrapped = [&](const std::array<double, 2>& u) {
    return objective(softplus(u[0]), 1.0 + softplus(u[1]));
  };

  std::vector<std::array<double, 2>> starts;
  starts.push_back({softplus_inv(start[0]), softplus_inv(start[1] - 1.0)});
  if (restarts > 1) {
    // fixed multistart grid, ranked by objective value
    std::vector<std::pair<double, std::array<double, 2>>> grid;
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        const double x = 0.1 * std::pow(20.0 / 0.1, i / 15.0);
        const double y = 1.01 * std::pow(50.0 / 1.01, j / 15.0);
        if (y <= 1.0) continue;
        const double v = objective(x, y);
        if (std::isfinite(v)) grid.push_back({v, {x, y}});
      }
    }
    std::stable_sort(grid.begin(), grid.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < restarts - 1 && i < static_cast<int>(grid.size()); ++i) {
      starts.push_back({softplus_inv(grid[i].second[0]), softplus_inv(grid[i].second[1] - 1.0)});
    }
  }

  bool have = false;
  NmResult best{};
  int total_evals = 0;
  for (const auto& s0 : starts) {
    NmResult r = nelder_mead(wrapped, s0, tol, 2000);
    total_evals += r.evaluations;
    if (!have || r.value < best.value) {
      best = r;
      have = true;
    }
  }
  if (!have) throw std::runtime_error("minimize_2d: all restarts diverged");

  Optimum2D out;
  out.point = {softplus(best.point[0]), 1.0 + softplus(best.point[1])};
  out.value = best.value;
  out.simplex_spread = best.spread;
  out.evaluations = total_evals;
  return out;
}

}  // namespace dickesim
