#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "edgeplace/appmodel.hpp"

namespace edgeplace {

struct RunConfig {
  std::optional<std::filesystem::path> scenario_path;  // built-in defaults when empty
  RequestPattern pattern = RequestPattern::P1;
  std::int64_t request_count = 800;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";
  bool export_lp = false;
  bool all_patterns = false;
};

/// Loads the scenario, generates requests, simulates, and writes outputs for
/// one pattern into `dir`.
void execute(const RunConfig& config, RequestPattern pattern, const std::filesystem::path& dir);

/// Command-line entry point. Returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeplace
