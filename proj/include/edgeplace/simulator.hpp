#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgeplace/appmodel.hpp"
#include "edgeplace/placement.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace {

struct StepRecord {
  std::uint64_t request_id = 0;
  std::string app;
  bool placed = false;
  // Set only for placed requests.
  std::optional<Tier> tier;
  std::optional<Requirement> requirement_used;
  std::optional<double> price;
  std::optional<double> response_time;
  std::optional<DeviceId> device;
};

struct RunMetadata {
  std::uint64_t seed = 0;
  std::string pattern;
  std::string scenario_hash;
  std::string rng{kRngAlgorithm};
};

struct SimulationResult {
  std::vector<StepRecord> records;
  // Index m holds the mean over the first m+1 placed records.
  std::vector<double> running_avg_price;
  std::vector<double> running_avg_response;
  std::size_t rejection_count = 0;
  RunMetadata metadata;

  std::size_t placed_count() const { return running_avg_price.size(); }
};

/// Called with the ledger as it stood when the decision was taken, before
/// any resources are committed for it.
using DecisionHook = std::function<void(const PlacementRequest&, const Topology&,
                                        const PlacementDecision&)>;

/// Places requests strictly in arrival order against `topology`, committing
/// each placement before the next request is solved. Placements persist for
/// the whole run.
SimulationResult run(Topology& topology, const std::vector<PlacementRequest>& requests,
                     RunMetadata metadata = {}, const DecisionHook& on_decision = {});

/// Writes steps.csv and curves.csv into `dir` (created if missing).
void write_csv(const SimulationResult& result, const std::filesystem::path& dir);

/// Writes meta.txt. The `generated_at` line is the only non-deterministic
/// content of a run's output.
void write_metadata(const SimulationResult& result, const std::filesystem::path& dir);

/// Rebuilds the curves.csv body from the text of a steps.csv.
std::string curves_from_steps(const std::string& steps_csv);

std::string steps_csv(const SimulationResult& result);
std::string curves_csv(const SimulationResult& result);

std::string_view version();

}  // namespace edgeplace
