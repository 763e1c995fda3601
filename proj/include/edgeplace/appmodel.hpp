#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edgeplace/ids.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace {

/// Measured footprint of an application offloaded to one device kind.
struct Variant {
  double processing_time = 0.0;  // seconds
  double resource_demand = 0.0;  // in the device kind's capacity units
};

/// Offload profile of one application. Device kinds missing from `variants`
/// cannot host the application.
struct AppProfile {
  std::string name;
  std::map<DeviceKind, Variant> variants;
  double bandwidth_demand = 0.0;  // Mbps reserved on every traversed link
  double data_size = 0.0;         // MB sent per request

  const Variant* variant(DeviceKind kind) const;
};

/// Throws ScenarioError unless the profile has at least one variant, no
/// negative numbers, and a positive bandwidth whenever data is transferred.
void validate(const AppProfile& profile);

struct CostCap {
  double limit = 0.0;  // USD/month
  bool operator==(const CostCap&) const = default;
};

struct ResponseCap {
  double limit = 0.0;  // seconds
  bool operator==(const ResponseCap&) const = default;
};

using Requirement = std::variant<CostCap, ResponseCap>;

double limit_of(const Requirement& req);
std::string_view kind_name(const Requirement& req);  // "cost" or "response"

/// One user's arrival. The ladder is tried in order until a rung admits a
/// placement.
struct PlacementRequest {
  std::uint64_t id = 0;
  AppProfile profile;
  InputNodeId origin;
  std::vector<Requirement> ladder;
};

/// Throws std::invalid_argument unless the ladder is non-empty, homogeneous,
/// and strictly loosening.
void validate_ladder(const std::vector<Requirement>& ladder);

enum class RequestPattern { P1, P2, P3 };

std::string_view to_string(RequestPattern pattern);
std::optional<RequestPattern> parse_pattern(std::string_view text);

/// An application together with the requirement menu users pick from and
/// its share of the arrival mix.
struct AppOffer {
  AppProfile profile;
  double weight = 1.0;
  std::vector<double> cost_caps;      // USD/month, ascending
  std::vector<double> response_caps;  // seconds, ascending
};

/// NAS.FT on GPU and MRI-Q on FPGA with the measured offload figures.
std::vector<AppProfile> default_profiles();

/// The default mix: NAS.FT and MRI-Q at 3:1 with their cap menus.
std::vector<AppOffer> default_offers();

/// Name of the pseudo-random generator behind generate_requests.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

/// Draws `n` requests. Every request consumes exactly three uniforms (app,
/// origin, menu entry) regardless of pattern, so the same seed yields the
/// same app/origin sequence under P1, P2 and P3.
std::vector<PlacementRequest> generate_requests(RequestPattern pattern, std::int64_t n,
                                                std::uint64_t seed,
                                                const Topology& topology,
                                                const std::vector<AppOffer>& offers);

std::vector<PlacementRequest> generate_requests(RequestPattern pattern, std::int64_t n,
                                                std::uint64_t seed,
                                                const Topology& topology);

}  // namespace edgeplace
