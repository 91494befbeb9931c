#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"

namespace gpade::cli {

inline const std::vector<std::string> kSubcommands = {
    "construct", "verify", "denominators", "constants", "padic", "global", "restricted"};

std::vector<std::string> columns_for(const std::string& subcommand);

struct InstanceResult {
  std::vector<Row> rows;
  int status = 0;
  std::vector<std::string> diagnostics;
};

/// One parameter set: a file path, or an inline alpha list when `inline_alphas` is set.
InstanceResult run_instance(const RunConfig& config, const std::string& source, bool inline_alphas);

/// Runs every instance (files first, then inline lists) on up to config.jobs workers and
/// concatenates the results in input order.
Report execute(const RunConfig& config);

}  // namespace gpade::cli
