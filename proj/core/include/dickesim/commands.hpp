#pragma once

#include <string>

#include "dickesim/config.hpp"

namespace dickesim {

// Sweep and report commands behind the CLI subcommands.  Each command
// materializes its effective configuration (defaults overlaid by the
// given config), emits CSV with a provenance header into out_dir, and
// returns a process exit code: 0 success, 2 config error, 3 regime
// violation in strict mode.
int cmd_field_map(RunConfig cfg, const std::string& out_dir);
int cmd_optimize(RunConfig cfg, const std::string& out_dir);
int cmd_ts_map(RunConfig cfg, const std::string& out_dir);
int cmd_oracle_compare(RunConfig cfg, const std::string& out_dir);
int cmd_pulse_sim(RunConfig cfg, const std::string& out_dir);
int cmd_verify(RunConfig cfg, const std::string& out_dir);

}  // namespace dickesim
