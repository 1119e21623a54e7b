// Command-line front end: parameter sweeps, figure-data regeneration,
// oracle comparisons, and pulse-sequence reports, all emitting CSV.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "dickesim/commands.hpp"
#include "dickesim/config.hpp"
#include "dickesim/version.hpp"

namespace {

struct FlagSpec {
  std::string flag;
  std::string key;
  std::string help;
};

// Registers --config/--out/--seed plus per-command flags; values land in
// the RunConfig only when actually given, preserving defaults < file <
// flags precedence.
struct SubcommandBinding {
  CLI::App* app = nullptr;
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::pair<std::string, std::string*>> captured;

  void add_common(CLI::App* sub) {
    app = sub;
    sub->add_option("--config", config_path, "flat key = value config file");
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
  }

  void add_flag(const FlagSpec& spec) {
    auto* storage = new std::string();  // lives for the duration of main
    captured.push_back({spec.key, storage});
    app->add_option(spec.flag, *storage, spec.help);
  }

  dickesim::RunConfig materialize() const {
    dickesim::RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const auto& [key, storage] : captured) {
      if (app->count("--" + key) > 0) cfg.set(key, *storage);
    }
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dicke-probe single-spin detection toolkit"};
  app.set_version_flag("--version", std::string("dickesim ") + dickesim::version_string);
  app.require_subcommand(1);

  std::vector<std::pair<SubcommandBinding*, int (*)(dickesim::RunConfig, const std::string&)>>
      dispatch;

  auto make_sub = [&](const std::string& name, const std::string& desc,
                      int (*fn)(dickesim::RunConfig, const std::string&),
                      const std::vector<FlagSpec>& flags) {
    auto* binding = new SubcommandBinding();
    CLI::App* sub = app.add_subcommand(name, desc);
    binding->add_common(sub);
    for (const auto& f : flags) binding->add_flag(f);
    dispatch.push_back({binding, fn});
    return sub;
  };

  make_sub("field-map", "dipolar field map over (r, z)", dickesim::cmd_field_map,
           {{"--r_min_um", "r_min_um", "radial axis start (um)"},
            {"--r_max_um", "r_max_um", "radial axis end (um)"},
            {"--n_r", "n_r", "radial grid points"},
            {"--z_min_um", "z_min_um", "vertical axis start (um)"},
            {"--z_max_um", "z_max_um", "vertical axis end (um)"},
            {"--n_z", "n_z", "vertical grid points"},
            {"--seed", "seed", "echoed into the provenance header"}});

  make_sub("optimize", "recover the model optima (time overhead and substrate shape)",
           dickesim::cmd_optimize, {{"--seed", "seed", "echoed into the provenance header"}});

  make_sub("ts-map", "detection-time map over density and standoff", dickesim::cmd_ts_map,
           {{"--rho_min_cm3", "rho_min_cm3", "density axis start (cm^-3)"},
            {"--rho_max_cm3", "rho_max_cm3", "density axis end (cm^-3)"},
            {"--n_rho", "n_rho", "density grid points"},
            {"--zmin_min_um", "zmin_min_um", "standoff axis start (um)"},
            {"--zmin_max_um", "zmin_max_um", "standoff axis end (um)"},
            {"--n_zmin", "n_zmin", "standoff grid points"},
            {"--seed", "seed", "echoed into the provenance header"}});

  make_sub("oracle-compare", "exact probability vs closed-form models",
           dickesim::cmd_oracle_compare,
           {{"--L_list", "L_list", "comma-separated even spin counts"},
            {"--u_min", "u_min", "rescaled-time grid start"},
            {"--u_max", "u_max", "rescaled-time grid end"},
            {"--n_u", "n_u", "rescaled-time grid points"},
            {"--T2_s", "T2_s", "dephasing time (s)"},
            {"--g_scale", "g_scale", "dipolar coupling scale factor"},
            {"--seed", "seed", "lattice seed"}});

  make_sub("pulse-sim", "preparation and readout pulse-sequence fidelities",
           dickesim::cmd_pulse_sim,
           {{"--L", "L", "probe spin count"},
            {"--lambda_rad_s", "lambda_rad_s", "collective coupling (rad/s)"},
            {"--ratios", "ratios", "comma-separated hard-pulse drive ratios"},
            {"--selectivity", "selectivity", "soft-pulse amplitude over 2*chi"},
            {"--strict", "strict", "exit 3 on regime violations (true/false)"},
            {"--seed", "seed", "echoed into the provenance header"}});

  make_sub("verify", "combinatorial and invariance self-checks", dickesim::cmd_verify,
           {{"--L_max", "L_max", "largest even L for pair counts"},
            {"--nv_draws", "nv_draws", "random coupling draws"},
            {"--seed", "seed", "draw seed"}});

  CLI11_PARSE(app, argc, argv);

  for (const auto& [binding, fn] : dispatch) {
    if (!binding->app->parsed()) continue;
    try {
      return fn(binding->materialize(), binding->out_dir);
    } catch (const dickesim::ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}
