#include "edgeplace/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edgeplace/error.hpp"

namespace edgeplace {

using Json = nlohmann::ordered_json;

namespace {

Json link_to_json(const LinkSpec& l) {
  return Json{{"bandwidth_mbps", l.bandwidth_mbps}, {"month_cost_usd", l.month_cost_usd}};
}

LinkSpec link_from_json(const Json& j) {
  return LinkSpec{j.at("bandwidth_mbps").get<double>(), j.at("month_cost_usd").get<double>()};
}

Tier tier_key(const std::string& key) {
  auto t = parse_tier(key);
  if (!t) throw ScenarioError("unknown tier '" + key + "'");
  return *t;
}

DeviceKind kind_key(const std::string& key) {
  auto k = parse_device_kind(key);
  if (!k) throw ScenarioError("unknown device kind '" + key + "'");
  return *k;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw ScenarioError(what);
}

void validate_config(const ScenarioConfig& c) {
  check(c.cloud_sites > 0, "cloud_sites must be positive");
  check(c.carrier_edges_per_cloud > 0, "carrier_edges_per_cloud must be positive");
  check(c.user_edges_per_carrier > 0, "user_edges_per_carrier must be positive");
  check(c.input_nodes_per_user_edge > 0, "input_nodes_per_user_edge must be positive");
  for (Tier t : kAllTiers) {
    auto it = c.tier_multiplier.find(t);
    check(it != c.tier_multiplier.end() && it->second > 0.0,
          "missing or non-positive tier multiplier for " + std::string(to_string(t)));
  }
  for (const auto& [tier, stocks] : c.inventory) {
    for (const DeviceStock& s : stocks) {
      check(s.count >= 0, "negative device count");
      check(s.capacity > 0.0, "device capacity must be positive");
      auto it = c.unit_cost.find(s.kind);
      check(it != c.unit_cost.end() && it->second >= 0.0,
            "missing unit cost for " + std::string(to_string(s.kind)));
    }
  }
  check(c.carrier_to_cloud.bandwidth_mbps > 0.0 && c.carrier_to_cloud.month_cost_usd >= 0.0,
        "invalid carrier_edge_to_cloud link");
  check(c.user_to_carrier.bandwidth_mbps > 0.0 && c.user_to_carrier.month_cost_usd >= 0.0,
        "invalid user_edge_to_carrier_edge link");
  for (const AppOffer& a : c.apps) {
    validate(a.profile);
    check(a.weight > 0.0, "application weight must be positive: " + a.profile.name);
  }
}

}  // namespace

ScenarioConfig default_scenario_config() {
  ScenarioConfig c;
  c.name = "default";
  c.cloud_sites = 5;
  c.carrier_edges_per_cloud = 4;
  c.user_edges_per_carrier = 3;
  c.input_nodes_per_user_edge = 5;
  c.tier_multiplier = {{Tier::Cloud, 1.0}, {Tier::CarrierEdge, 1.25}, {Tier::UserEdge, 1.5}};
  // Full-server cloud fees of 500 / 1000 / 1200 USD spread over capacities
  // of 8 units / 16 GB / 100 %.
  c.unit_cost = {{DeviceKind::CPU, 500.0 / 8.0},
                 {DeviceKind::GPU, 1000.0 / 16.0},
                 {DeviceKind::FPGA, 1200.0 / 100.0}};
  c.inventory[Tier::Cloud] = {{DeviceKind::CPU, 8, 8.0},
                              {DeviceKind::GPU, 4, 16.0},
                              {DeviceKind::FPGA, 2, 100.0}};
  c.inventory[Tier::CarrierEdge] = {{DeviceKind::CPU, 4, 8.0},
                                    {DeviceKind::GPU, 2, 8.0},
                                    {DeviceKind::FPGA, 1, 100.0}};
  c.inventory[Tier::UserEdge] = {{DeviceKind::CPU, 2, 8.0}, {DeviceKind::GPU, 1, 4.0}};
  c.carrier_to_cloud = {100.0, 80.0};
  c.user_to_carrier = {30.0, 50.0};
  c.apps = default_offers();
  return c;
}

Topology build_topology(const ScenarioConfig& config) {
  validate_config(config);
  Topology topo;
  std::vector<SiteId> clouds, carriers, users;
  for (int i = 0; i < config.cloud_sites; ++i) clouds.push_back(topo.add_cloud_site());
  for (SiteId cloud : clouds) {
    for (int i = 0; i < config.carrier_edges_per_cloud; ++i) {
      carriers.push_back(topo.add_child_site(cloud, config.carrier_to_cloud.bandwidth_mbps,
                                             config.carrier_to_cloud.month_cost_usd));
    }
  }
  for (SiteId carrier : carriers) {
    for (int i = 0; i < config.user_edges_per_carrier; ++i) {
      users.push_back(topo.add_child_site(carrier, config.user_to_carrier.bandwidth_mbps,
                                          config.user_to_carrier.month_cost_usd));
    }
  }

  auto stock_sites = [&](Tier tier, const std::vector<SiteId>& sites) {
    auto inv = config.inventory.find(tier);
    if (inv == config.inventory.end()) return;
    const double mult = config.tier_multiplier.at(tier);
    for (SiteId s : sites) {
      for (const DeviceStock& stock : inv->second) {
        const double fee = config.unit_cost.at(stock.kind) * mult * stock.capacity;
        for (int i = 0; i < stock.count; ++i) {
          topo.add_device(s, stock.kind, stock.capacity, fee);
        }
      }
    }
  };
  stock_sites(Tier::Cloud, clouds);
  stock_sites(Tier::CarrierEdge, carriers);
  stock_sites(Tier::UserEdge, users);

  for (SiteId u : users) {
    for (int i = 0; i < config.input_nodes_per_user_edge; ++i) topo.add_input_node(u);
  }
  return topo;
}

Topology build_default_scenario() { return build_topology(default_scenario_config()); }

std::string to_json(const ScenarioConfig& c) {
  Json j;
  j["name"] = c.name;
  j["fanout"] = Json{{"cloud_sites", c.cloud_sites},
                     {"carrier_edges_per_cloud", c.carrier_edges_per_cloud},
                     {"user_edges_per_carrier", c.user_edges_per_carrier},
                     {"input_nodes_per_user_edge", c.input_nodes_per_user_edge}};
  Json mult = Json::object();
  for (const auto& [t, m] : c.tier_multiplier) mult[std::string(to_string(t))] = m;
  j["tier_multipliers"] = mult;
  Json unit = Json::object();
  for (const auto& [k, v] : c.unit_cost) unit[std::string(to_string(k))] = v;
  j["unit_costs_usd_month"] = unit;
  Json inv = Json::object();
  for (const auto& [t, stocks] : c.inventory) {
    Json arr = Json::array();
    for (const DeviceStock& s : stocks) {
      arr.push_back(Json{{"kind", std::string(to_string(s.kind))},
                         {"count", s.count},
                         {"capacity", s.capacity}});
    }
    inv[std::string(to_string(t))] = arr;
  }
  j["inventory"] = inv;
  j["links"] = Json{{"carrier_edge_to_cloud", link_to_json(c.carrier_to_cloud)},
                    {"user_edge_to_carrier_edge", link_to_json(c.user_to_carrier)}};
  Json apps = Json::array();
  for (const AppOffer& a : c.apps) {
    Json variants = Json::object();
    for (const auto& [k, v] : a.profile.variants) {
      variants[std::string(to_string(k))] =
          Json{{"processing_s", v.processing_time}, {"resource_demand", v.resource_demand}};
    }
    apps.push_back(Json{{"name", a.profile.name},
                        {"weight", a.weight},
                        {"bandwidth_mbps", a.profile.bandwidth_demand},
                        {"data_mb", a.profile.data_size},
                        {"variants", variants},
                        {"cost_caps_usd_month", a.cost_caps},
                        {"response_caps_s", a.response_caps}});
  }
  j["apps"] = apps;
  return j.dump(2) + "\n";
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  ScenarioConfig c;
  try {
    const Json j = Json::parse(json_text);
    c.name = j.value("name", std::string("unnamed"));
    const Json& f = j.at("fanout");
    c.cloud_sites = f.at("cloud_sites").get<int>();
    c.carrier_edges_per_cloud = f.at("carrier_edges_per_cloud").get<int>();
    c.user_edges_per_carrier = f.at("user_edges_per_carrier").get<int>();
    c.input_nodes_per_user_edge = f.at("input_nodes_per_user_edge").get<int>();
    for (const auto& [key, v] : j.at("tier_multipliers").items()) {
      c.tier_multiplier[tier_key(key)] = v.get<double>();
    }
    for (const auto& [key, v] : j.at("unit_costs_usd_month").items()) {
      c.unit_cost[kind_key(key)] = v.get<double>();
    }
    for (const auto& [key, arr] : j.at("inventory").items()) {
      auto& stocks = c.inventory[tier_key(key)];
      for (const Json& s : arr) {
        stocks.push_back(DeviceStock{kind_key(s.at("kind").get<std::string>()),
                                     s.at("count").get<int>(), s.at("capacity").get<double>()});
      }
    }
    const Json& links = j.at("links");
    c.carrier_to_cloud = link_from_json(links.at("carrier_edge_to_cloud"));
    c.user_to_carrier = link_from_json(links.at("user_edge_to_carrier_edge"));
    for (const Json& a : j.at("apps")) {
      AppOffer offer;
      offer.profile.name = a.at("name").get<std::string>();
      offer.weight = a.value("weight", 1.0);
      offer.profile.bandwidth_demand = a.at("bandwidth_mbps").get<double>();
      offer.profile.data_size = a.at("data_mb").get<double>();
      for (const auto& [key, v] : a.at("variants").items()) {
        offer.profile.variants[kind_key(key)] =
            Variant{v.at("processing_s").get<double>(), v.at("resource_demand").get<double>()};
      }
      offer.cost_caps = a.value("cost_caps_usd_month", std::vector<double>{});
      offer.response_caps = a.value("response_caps_s", std::vector<double>{});
      c.apps.push_back(std::move(offer));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }
  validate_config(c);
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

std::string scenario_hash(const ScenarioConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace edgeplace
