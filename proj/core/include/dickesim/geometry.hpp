#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dickesim/constants.hpp"

namespace dickesim {

// Cylindrical shell of probe spins above the target: radius r_max,
// standoff z_min to z_max, all in micrometres.
struct Geometry {
  double r_max = 1.0;
  double z_min = 1.0;
  double z_max = 2.0;
};

struct Couplings {
  double G = constants::default_dipolar_G;  // rad s^-1 um^3
  double s = 1.0;                           // target spin label, +1 or -1
};

// Probe-spin positions with precomputed per-unit-s field values
// d(omega_s)/ds = 2 G (r^2 - 2 z^2) / (r^2 + z^2)^{5/2}.
struct SpinLattice {
  std::vector<double> r;             // um
  std::vector<double> z;             // um
  std::vector<double> omega_over_s;  // rad/s per unit s
  double rho_cm3 = 0.0;
  std::uint64_t seed = 0;

  std::size_t count() const { return r.size(); }
};

enum class LatticeMode { UniformRandom, CubicGrid };

// Secular dipolar field at cylindrical position (r, z) from the target
// spin at the origin.
double omega_s(double r, double z, const Couplings& c);

// Expected spin count rho * pi * r_max^2 * (z_max - z_min), rounded.
long long spin_count(const Geometry& geom, double rho_cm3);

SpinLattice generate_lattice(const Geometry& geom, double rho_cm3, LatticeMode mode,
                             const Couplings& c, std::uint64_t seed,
                             double min_spacing_um = 0.0);

// Signed sum over lattice sites of d(omega_s)/ds.
double sum_domega_ds(const SpinLattice& lat);

// Continuum limit |sum_j d(omega_s)/ds| over the shell:
//   4 pi G rho | z_max/sqrt(r_max^2+z_max^2) - z_min/sqrt(r_max^2+z_min^2) |
double continuum_domega_ds(const Geometry& geom, double rho_cm3, const Couplings& c);

// Dimensionless substrate shape factors in the normalized coordinates
// rt = r_max/z_min, zt = z_max/z_min (zt > 1).
double shape_f(double rt, double zt);
double shape_g(double rt, double zt);

void write_lattice_csv(std::ostream& os, const SpinLattice& lat);
SpinLattice read_lattice_csv(std::istream& is);

}  // namespace dickesim
