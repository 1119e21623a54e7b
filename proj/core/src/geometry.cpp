#include "dickesim/geometry.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dickesim {

using constants::per_um3_from_per_cm3;
using constants::pi;

double omega_s(double r, double z, const Couplings& c) {
  const double d2 = r * r + z * z;
  if (d2 == 0.0) throw std::domain_error("omega_s: field is singular at the origin");
  return 2.0 * c.G * c.s * (r * r - 2.0 * z * z) / std::pow(d2, 2.5);
}

long long spin_count(const Geometry& geom, double rho_cm3) {
  const double rho = rho_cm3 * per_um3_from_per_cm3;
  return std::llround(rho * pi * geom.r_max * geom.r_max * (geom.z_max - geom.z_min));
}

namespace {

void check_geometry(const Geometry& g) {
  if (!(g.r_max > 0.0) || !(0.0 < g.z_min) || !(g.z_min < g.z_max))
    throw std::invalid_argument("geometry: need r_max > 0 and 0 < z_min < z_max");
}

struct Point3 {
  double x, y, z;
};

}  // namespace

SpinLattice generate_lattice(const Geometry& geom, double rho_cm3, LatticeMode mode,
                             const Couplings& c, std::uint64_t seed,
                             double min_spacing_um) {
  check_geometry(geom);
  const long long n = spin_count(geom, rho_cm3);
  if (n < 1) throw std::invalid_argument("generate_lattice: expected spin count < 1");

  SpinLattice lat;
  lat.rho_cm3 = rho_cm3;
  lat.seed = seed;

  std::vector<Point3> pts;
  if (mode == LatticeMode::UniformRandom) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    pts.reserve(static_cast<std::size_t>(n));
    const double min2 = min_spacing_um * min_spacing_um;
    long long attempts = 0;
    while (static_cast<long long>(pts.size()) < n) {
      if (++attempts > 1000 * n)
        throw std::runtime_error("generate_lattice: min-spacing rejection stalled");
      // area-weighted radius, uniform angle and height
      const double r = geom.r_max * std::sqrt(uni(rng));
      const double phi = 2.0 * pi * uni(rng);
      const double z = geom.z_min + (geom.z_max - geom.z_min) * uni(rng);
      Point3 p{r * std::cos(phi), r * std::sin(phi), z};
      if (min_spacing_um > 0.0) {
        bool ok = true;
        for (const auto& q : pts) {
          const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
          if (dx * dx + dy * dy + dz * dz < min2) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      pts.push_back(p);
    }
  } else {
    const double a = std::pow(rho_cm3 * per_um3_from_per_cm3, -1.0 / 3.0);
    for (double z = geom.z_min + 0.5 * a; z <= geom.z_max; z += a) {
      for (double x = -geom.r_max; x <= geom.r_max; x += a) {
        for (double y = -geom.r_max; y <= geom.r_max; y += a) {
          if (x * x + y * y <= geom.r_max * geom.r_max) pts.push_back({x, y, z});
        }
      }
    }
    if (pts.empty()) throw std::invalid_argument("generate_lattice: grid clipped to empty");
  }

  lat.r.reserve(pts.size());
  lat.z.reserve(pts.size());
  lat.omega_over_s.reserve(pts.size());
  Couplings unit = c;
  unit.s = 1.0;
  for (const auto& p : pts) {
    const double r = std::hypot(p.x, p.y);
    lat.r.push_back(r);
    lat.z.push_back(p.z);
    lat.omega_over_s.push_back(omega_s(r, p.z, unit));
  }
  return lat;
}

double sum_domega_ds(const SpinLattice& lat) {
  if (lat.count() == 0) throw std::invalid_argument("sum_domega_ds: empty lattice");
  double s = 0.0;
  for (double w : lat.omega_over_s) s += w;
  return s;
}

double continuum_domega_ds(const Geometry& geom, double rho_cm3, const Couplings& c) {
  check_geometry(geom);
  const double rho = rho_cm3 * per_um3_from_per_cm3;
  const double hi = geom.z_max / std::sqrt(geom.r_max * geom.r_max + geom.z_max * geom.z_max);
  const double lo = geom.z_min / std::sqrt(geom.r_max * geom.r_max + geom.z_min * geom.z_min);
  return 4.0 * pi * c.G * rho * std::abs(hi - lo);
}

namespace {

double shape_bracket(double rt, double zt) {
  if (!(rt > 0.0)) throw std::domain_error("shape: rt must be > 0");
  if (!(zt > 1.0)) throw std::domain_error("shape: zt must be > 1");
  return zt / std::sqrt(rt * rt + zt * zt) - 1.0 / std::sqrt(rt * rt + 1.0);
}

}  // namespace

double shape_f(double rt, double zt) {
  return std::pow(rt * rt * (zt - 1.0), 0.25) / shape_bracket(rt, zt);
}

double shape_g(double rt, double zt) {
  return std::sqrt(rt * rt * (zt - 1.0)) / shape_bracket(rt, zt);
}

void write_lattice_csv(std::ostream& os, const SpinLattice& lat) {
  os << "r_um,z_um,omega_over_s\n";
  os.precision(17);
  for (std::size_t j = 0; j < lat.count(); ++j) {
    os << lat.r[j] << ',' << lat.z[j] << ',' << lat.omega_over_s[j] << '\n';
  }
}

SpinLattice read_lattice_csv(std::istream& is) {
  SpinLattice lat;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "r_um,z_um,omega_over_s")
        throw std::runtime_error("read_lattice_csv: unexpected header: " + line);
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    double r, z, w;
    char c1, c2;
    if (!(ss >> r >> c1 >> z >> c2 >> w) || c1 != ',' || c2 != ',')
      throw std::runtime_error("read_lattice_csv: malformed row: " + line);
    lat.r.push_back(r);
    lat.z.push_back(z);
    lat.omega_over_s.push_back(w);
  }
  if (!header_seen) throw std::runtime_error("read_lattice_csv: missing header");
  return lat;
}

}  // namespace dickesim
