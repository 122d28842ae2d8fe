#pragma once

#include <string>

#include <json.hpp>

#include "smashhom/group_file.hpp"

namespace smashhom {

struct RunOptions {
  std::string command;  // homology | cohomology | twisted-homology | duality |
                        // oracle-check | bar-check | catalog
  std::string group;    // "catalog:NAME" or a file path
  long trunc = -1;      // -1 selects the per-command default
  bool per_class = false;
  bool use_double = false;
  std::string format = "table";  // table | machine
  int jobs = 1;
  long bar_nmax = 2;
  long bar_dmax = 3;
};

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;
};

/// Executes one CLI command. Reports are byte-stable for fixed inputs except
/// for the timing_ms field. Input problems throw SchemaError; verification
/// failures are data (exit_code 1).
RunResult run(const RunOptions& opts);

/// Human-readable rendering of a machine report.
std::string render_table(const nlohmann::json& report);

}  // namespace smashhom
