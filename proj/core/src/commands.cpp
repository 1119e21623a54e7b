#include "dickesim/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "dickesim/binomial.hpp"
#include "dickesim/constants.hpp"
#include "dickesim/csv.hpp"
#include "dickesim/dicke.hpp"
#include "dickesim/evolution.hpp"
#include "dickesim/geometry.hpp"
#include "dickesim/nv_chain.hpp"
#include "dickesim/optimize.hpp"
#include "dickesim/pair_counts.hpp"
#include "dickesim/parallel.hpp"
#include "dickesim/sensitivity.hpp"
#include "dickesim/series_probability.hpp"
#include "dickesim/spin_star.hpp"

namespace dickesim {

using constants::pi;

namespace {

namespace fs = std::filesystem;

std::string out_path(const std::string& out_dir, const std::string& name) {
  fs::create_directories(out_dir);
  return (fs::path(out_dir) / name).string();
}

void fill_default(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (!cfg.has(key)) cfg.set(key, value);
}

std::vector<double> lin_grid(double lo, double hi, long long n) {
  std::vector<double> g;
  if (n < 1) throw ConfigError("grid: need at least one point");
  if (n == 1) return {lo};
  g.reserve(n);
  for (long long i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / double(n - 1));
  return g;
}

std::vector<double> log_grid(double lo, double hi, long long n) {
  if (!(lo > 0.0) || !(hi > lo)) throw ConfigError("grid: log axis needs 0 < lo < hi");
  std::vector<double> g;
  if (n == 1) return {lo};
  g.reserve(n);
  for (long long i = 0; i < n; ++i)
    g.push_back(lo * std::pow(hi / lo, i / double(n - 1)));
  return g;
}

}  // namespace

int cmd_field_map(RunConfig cfg, const std::string& out_dir) {
  fill_default(cfg, "r_min_um", "0");
  fill_default(cfg, "seed", "0");
  fill_default(cfg, "r_max_um", "2.5");
  fill_default(cfg, "n_r", "26");
  fill_default(cfg, "z_min_um", "0");
  fill_default(cfg, "z_max_um", "2.5");
  fill_default(cfg, "n_z", "26");

  const auto rs = lin_grid(cfg.get_double("r_min_um", 0), cfg.get_double("r_max_um", 2.5),
                           cfg.get_int("n_r", 26));
  const auto zs = lin_grid(cfg.get_double("z_min_um", 0), cfg.get_double("z_max_um", 2.5),
                           cfg.get_int("n_z", 26));

  CsvWriter csv(out_path(out_dir, "field_map.csv"));
  csv.provenance("field-map", cfg);
  csv.header({"r_um", "z_um", "omega_reduced"});
  long long skipped = 0;
  Couplings unit{0.5, 1.0};  // 2 G s = 1, so the column is the reduced field
  for (double z : zs) {
    for (double r : rs) {
      if (r == 0.0 && z == 0.0) {
        ++skipped;
        continue;
      }
      csv.row({CsvWriter::num(r), CsvWriter::num(z), CsvWriter::num(omega_s(r, z, unit))});
    }
  }
  csv.comment("skipped_singular_cells = " + std::to_string(skipped));
  return 0;
}

int cmd_optimize(RunConfig cfg, const std::string& out_dir) {
  fill_default(cfg, "seed", "0");
  const ModelOptima& opt = model_optima();
  CsvWriter csv(out_path(out_dir, "optimize.csv"));
  csv.provenance("optimize", cfg);
  csv.header({"quantity", "x1", "x2", "value", "evaluations"});

  // re-run with counters so the evaluations column reflects this run
  const Optimum1D fu = minimize_scalar(
      [](double v) { return sensitivity_F(std::sqrt(v)); }, 1e-3, 5.0, 1e-10);
  csv.row({"F_min_vs_squared_time", CsvWriter::num(fu.x), CsvWriter::num(std::sqrt(fu.x)),
           CsvWriter::num(fu.value), std::to_string(fu.evaluations)});
  const Optimum2D ff =
      minimize_2d([](double rt, double zt) { return shape_f(rt, zt); }, {1.5, 3.0}, 1e-9, 8);
  csv.row({"shape_f_min", CsvWriter::num(ff.point[0]), CsvWriter::num(ff.point[1]),
           CsvWriter::num(ff.value), std::to_string(ff.evaluations)});
  const Optimum2D gg =
      minimize_2d([](double rt, double zt) { return shape_g(rt, zt); }, {1.0, 2.0}, 1e-9, 8);
  csv.row({"shape_g_min", CsvWriter::num(gg.point[0]), CsvWriter::num(gg.point[1]),
           CsvWriter::num(gg.value), std::to_string(gg.evaluations)});
  csv.comment("probe_count_constant pi*rt^2*(zt-1) = " +
              CsvWriter::num(pi * opt.f_rt * opt.f_rt * (opt.f_zt - 1.0)));
  return 0;
}

int cmd_ts_map(RunConfig cfg, const std::string& out_dir) {
  fill_default(cfg, "rho_min_cm3", "1e16");
  fill_default(cfg, "seed", "0");
  fill_default(cfg, "rho_max_cm3", "1e19");
  fill_default(cfg, "n_rho", "25");
  fill_default(cfg, "zmin_min_um", "0.1");
  fill_default(cfg, "zmin_max_um", "10");
  fill_default(cfg, "n_zmin", "25");

  const auto rhos = log_grid(cfg.get_double("rho_min_cm3", 1e16),
                             cfg.get_double("rho_max_cm3", 1e19), cfg.get_int("n_rho", 25));
  const auto zmins = log_grid(cfg.get_double("zmin_min_um", 0.1),
                              cfg.get_double("zmin_max_um", 10), cfg.get_int("n_zmin", 25));

  struct Row {
    double rho, zmin, ts_dicke, ts_sep;
  };
  std::vector<Row> rows(rhos.size() * zmins.size());
  model_optima();  // warm the cache before the worker pool
  parallel_for(rows.size(), [&](std::size_t i) {
    const double rho = rhos[i / zmins.size()];
    const double zmin = zmins[i % zmins.size()];
    SensitivityParams p;
    p.rho_cm3 = rho;
    p.T2 = constants::rho_T2_product_cm3_s / rho;
    p.geom.z_min = zmin;
    p.geom.z_max = 2.0 * zmin;
    p.geom.r_max = zmin;
    rows[i] = {rho, zmin, Ts_dicke(p), Ts_separable(p)};
  });

  CsvWriter csv(out_path(out_dir, "ts_map.csv"));
  csv.provenance("ts-map", cfg);
  csv.header({"rho_cm3", "z_min_um", "Ts_dicke_s", "Ts_sep_s"});
  for (const auto& r : rows) {
    csv.row({CsvWriter::num(r.rho), CsvWriter::num(r.zmin), CsvWriter::num(r.ts_dicke),
             CsvWriter::num(r.ts_sep)});
  }
  return 0;
}

int cmd_oracle_compare(RunConfig cfg, const std::string& out_dir) {
  fill_default(cfg, "L_list", "4,6,8,10,12");
  fill_default(cfg, "u_min", "0.05");
  fill_default(cfg, "u_max", "1.5");
  fill_default(cfg, "n_u", "15");
  fill_default(cfg, "T2_s", "1.0");
  fill_default(cfg, "g_scale", "1e-3");
  fill_default(cfg, "seed", "12345");

  const auto Ls = cfg.get_int_list("L_list", {4, 6, 8, 10, 12});
  const auto us = lin_grid(cfg.get_double("u_min", 0.05), cfg.get_double("u_max", 1.5),
                           cfg.get_int("n_u", 15));
  const double T2 = cfg.get_double("T2_s", 1.0);
  const std::uint64_t seed = cfg.get_u64("seed", 12345);

  Couplings weak;
  weak.G = constants::default_dipolar_G * cfg.get_double("g_scale", 1e-3);

  // one lattice per L, sized to exactly L spins in the unit shell
  std::vector<SpinLattice> lattices;
  for (long long L : Ls) {
    if (L < 2 || L % 2 != 0 || L > 13) throw ConfigError("oracle-compare: L must be even, <= 13");
    Geometry geom{1.0, 1.0, 2.0};
    const double rho_cm3 = double(L) / (pi * geom.r_max * geom.r_max *
                                        (geom.z_max - geom.z_min)) /
                           constants::per_um3_from_per_cm3;
    lattices.push_back(generate_lattice(geom, rho_cm3, LatticeMode::UniformRandom, weak, seed));
  }

  struct Row {
    long long L;
    double u, t, sum_omega, exact, model, s1, s2, ssig, sp, diff;
  };
  std::vector<Row> rows(Ls.size() * us.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const std::size_t li = i / us.size();
    const long long L = Ls[li];
    const double u = us[i % us.size()];
    const double t = u * T2 / std::sqrt(double(L));
    const DephasingChannel ch = make_channel(lattices[li], weak, t, T2);
    const ProbabilityTerms ex = exact_p(ch);
    double sum_omega = 0.0;
    for (double w : ch.fields) sum_omega += w;
    SensitivityParams sp;
    sp.T2 = T2;
    sp.u = u;
    sp.L = double(L);
    const double model = p_asymptotic(sp, sum_omega);
    const SeriesTerms st = series_p_terms(int(L), t, T2, sum_omega);
    rows[i] = {L, u, t, sum_omega, ex.p, model, st.term1, st.term2, st.signal, st.p,
               std::abs(ex.p - model)};
  });

  CsvWriter csv(out_path(out_dir, "oracle_compare.csv"));
  csv.provenance("oracle-compare", cfg);
  csv.comment("lattice_seed = " + std::to_string(seed));
  csv.header({"L", "u", "t_s", "sum_omega", "exact_p", "asymptotic_p", "series_term1",
              "series_term2", "series_signal", "series_p", "exact_vs_asymptotic"});
  for (const auto& r : rows) {
    csv.row({std::to_string(r.L), CsvWriter::num(r.u), CsvWriter::num(r.t),
             CsvWriter::num(r.sum_omega), CsvWriter::num(r.exact), CsvWriter::num(r.model),
             CsvWriter::num(r.s1), CsvWriter::num(r.s2), CsvWriter::num(r.ssig),
             CsvWriter::num(r.sp), CsvWriter::num(r.diff)});
  }
  return 0;
}

namespace {

StarParams pulse_sim_params(int L, double lambda, double ratio, double selectivity) {
  StarParams p;
  p.omega_P = 1e9;
  p.omega_A = p.omega_P + 25.0 * lambda * std::sqrt(double(L));
  p.lambda = lambda;
  p.lambda_d = ratio * lambda;
  const double chi = p.lambda * p.lambda / (p.omega_A - p.omega_P);
  p.lambda_dp = 2.0 * chi * selectivity;
  p.omega_d = p.omega_A;
  p.omega_dp = p.omega_P + chi;
  return p;
}

}  // namespace

int cmd_pulse_sim(RunConfig cfg, const std::string& out_dir) {
  fill_default(cfg, "L", "8");
  fill_default(cfg, "seed", "0");
  fill_default(cfg, "lambda_rad_s", "100000");
  fill_default(cfg, "ratios", "10,30,100");
  fill_default(cfg, "selectivity", "0.02");
  fill_default(cfg, "strict", "false");

  const int L = int(cfg.get_int("L", 8));
  const double lambda = cfg.get_double("lambda_rad_s", 1e5);
  const auto ratios = cfg.get_int_list("ratios", {10, 30, 100});
  const double selectivity = cfg.get_double("selectivity", 0.02);
  const bool strict = cfg.get_bool("strict", false);

  CsvWriter csv(out_path(out_dir, "pulse_sim.csv"));
  csv.provenance("pulse-sim", cfg);
  csv.header({"mode", "L", "drive_ratio", "prep_fidelity_z", "prep_fidelity_x",
              "uread_fidelity", "error"});

  bool regime_violation = false;

  {
    const StarParams p = pulse_sim_params(L, lambda, 100.0, selectivity);
    const PrepResult prep = prepare_dicke(L, p, true);
    const ReadoutResult rd = build_u_read(L, p, true);
    csv.row({"ideal", std::to_string(L), "", CsvWriter::num(prep.fidelity_z),
             CsvWriter::num(prep.fidelity_x), CsvWriter::num(rd.fidelity), ""});

    std::ofstream sched(out_path(out_dir, "schedule.csv"));
    write_schedule_csv(sched, prep.schedule);
  }

  for (long long ratio : ratios) {
    const StarParams p = pulse_sim_params(L, lambda, double(ratio), selectivity);
    std::string err;
    double fz = 0.0, fx = 0.0, fr = 0.0;
    try {
      const PrepResult prep = prepare_dicke(L, p, false);
      const ReadoutResult rd = build_u_read(L, p, false);
      fz = prep.fidelity_z;
      fx = prep.fidelity_x;
      fr = rd.fidelity;
    } catch (const std::domain_error& e) {
      err = e.what();
      regime_violation = true;
    }
    csv.row({"square_pulse", std::to_string(L), std::to_string(ratio), CsvWriter::num(fz),
             CsvWriter::num(fx), CsvWriter::num(fr), err});
  }

  if (regime_violation && strict) return 3;
  return 0;
}

int cmd_verify(RunConfig cfg, const std::string& out_dir) {
  fill_default(cfg, "L_max", "12");
  fill_default(cfg, "nv_draws", "100");
  fill_default(cfg, "seed", "1");

  const int L_max = int(cfg.get_int("L_max", 12));
  const int draws = int(cfg.get_int("nv_draws", 100));
  const std::uint64_t seed = cfg.get_u64("seed", 1);

  CsvWriter csv(out_path(out_dir, "verify.csv"));
  csv.provenance("verify", cfg);
  csv.header({"check", "L", "n", "expected", "actual", "pass"});

  bool all_ok = true;
  auto report = [&](const std::string& check, int L, int n, const std::string& expected,
                    const std::string& actual, bool pass) {
    csv.row({check, std::to_string(L), n >= 0 ? std::to_string(n) : "", expected, actual,
             pass ? "1" : "0"});
    if (!pass) {
      all_ok = false;
      std::cerr << "verify: FAIL " << check << " L=" << L << " n=" << n << "\n";
    }
  };

  for (int L = 2; L <= L_max; L += 2) {
    for (int n = 0; n <= L / 2; ++n) {
      const DuplicationCount c = count_balanced_pairs(L, n);
      report("balanced_pair_count", L, n, c.formula.str(), std::to_string(c.enumeration),
             c.matches);
    }
    for (int n = 1; n <= L / 2; ++n) {
      const DuplicationCount c = count_mixed_pairs(L, n);
      report("mixed_pair_count", L, n, c.formula.str(), std::to_string(c.enumeration),
             c.matches);
    }
    std::uint64_t lhs = 0;
    for (int n = 0; n <= L / 2; ++n) {
      const std::uint64_t b = binom_exact(L / 2, n);
      lhs += b * b;
    }
    const std::uint64_t rhs = binom_exact(L, L / 2);
    report("central_binomial_identity", L, -1, std::to_string(rhs), std::to_string(lhs),
           lhs == rhs);
  }

  {
    const int L = 4;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    for (int d = 0; d < draws; ++d) {
      Eigen::MatrixXd g1(L, L);
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) g1(i, j) = uni(rng);
      const InvarianceReport rep =
          nv_invariance_check(L, g1, Eigen::MatrixXd::Zero(L, L));
      worst = std::max(worst, rep.exchange_norm);
    }
    report("exchange_annihilates_bd_state", L, -1, "<=1e-12", CsvWriter::num(worst),
           worst <= 1e-12);

    Eigen::MatrixXd g2 = Eigen::MatrixXd::Ones(L, L);
    g2.diagonal().setZero();
    const InvarianceReport uni_rep =
        nv_invariance_check(L, Eigen::MatrixXd::Zero(L, L), g2);
    report("uniform_zz_eigenvector", L, -1, "residual<=1e-12",
           CsvWriter::num(uni_rep.zz_residual), uni_rep.zz_residual <= 1e-12);
    report("uniform_zz_eigenvalue", L, -1, CsvWriter::num(2.0 * (L / 2) * (L / 2)),
           CsvWriter::num(uni_rep.zz_eigenvalue),
           std::abs(uni_rep.zz_eigenvalue - 2.0 * (L / 2) * (L / 2)) <= 1e-12);

    Eigen::MatrixXd ring = Eigen::MatrixXd::Zero(L, L);
    for (int j = 0; j < L; ++j) {
      ring(j, (j + 1) % L) = 1.0;
      ring(j, (j + L - 1) % L) = 1.0;
    }
    const InvarianceReport ring_rep =
        nv_invariance_check(L, Eigen::MatrixXd::Zero(L, L), ring);
    report("ring_zz_residual_nonzero", L, -1, ">0.1", CsvWriter::num(ring_rep.zz_residual),
           ring_rep.zz_residual > 0.1);
  }

  std::cout << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return all_ok ? 0 : 1;
}

}  // namespace dickesim
