#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "edgeplace/appmodel.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace {

struct DeviceStock {
  DeviceKind kind = DeviceKind::CPU;
  int count = 0;          // servers per site
  double capacity = 0.0;  // per server
};

struct LinkSpec {
  double bandwidth_mbps = 0.0;
  double month_cost_usd = 0.0;
};

/// Declarative description of a balanced three-tier tree, its prices, and
/// the application mix. Device fees are derived per resource unit: a device
/// costs unit_cost[kind] * tier_multiplier[tier] * capacity per month.
struct ScenarioConfig {
  std::string name;
  int cloud_sites = 0;
  int carrier_edges_per_cloud = 0;
  int user_edges_per_carrier = 0;
  int input_nodes_per_user_edge = 0;
  std::map<Tier, double> tier_multiplier;
  std::map<DeviceKind, double> unit_cost;  // cloud USD/month per resource unit
  std::map<Tier, std::vector<DeviceStock>> inventory;
  LinkSpec carrier_to_cloud;
  LinkSpec user_to_carrier;
  std::vector<AppOffer> apps;
};

ScenarioConfig default_scenario_config();

/// Sites are numbered breadth-first (clouds, then carrier edges, then user
/// edges) and devices follow site order, then inventory order.
Topology build_topology(const ScenarioConfig& config);

/// 5 cloud, 20 carrier-edge and 60 user-edge sites feeding 300 input nodes.
Topology build_default_scenario();

/// Canonical JSON text (two-space indent, trailing newline). The checked-in
/// scenarios/default.json is exactly to_json(default_scenario_config()).
std::string to_json(const ScenarioConfig& config);
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string scenario_hash(const ScenarioConfig& config);

}  // namespace edgeplace
