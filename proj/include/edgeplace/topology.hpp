#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edgeplace/ids.hpp"

namespace edgeplace {

enum class Tier { Cloud, CarrierEdge, UserEdge };
enum class DeviceKind { CPU, GPU, FPGA };

inline constexpr std::array<Tier, 3> kAllTiers = {Tier::Cloud, Tier::CarrierEdge,
                                                  Tier::UserEdge};
inline constexpr std::array<DeviceKind, 3> kAllDeviceKinds = {
    DeviceKind::CPU, DeviceKind::GPU, DeviceKind::FPGA};

std::string_view to_string(Tier tier);
std::string_view to_string(DeviceKind kind);
std::optional<Tier> parse_tier(std::string_view text);
std::optional<DeviceKind> parse_device_kind(std::string_view text);

/// Distance from the cloud root: cloud 0, carrier edge 1, user edge 2.
constexpr int depth(Tier tier) { return static_cast<int>(tier); }

struct Device {
  DeviceId id;
  SiteId site;
  DeviceKind kind = DeviceKind::CPU;
  // GB of device RAM for GPU, percent of the board for FPGA, abstract units
  // for CPU.
  double capacity = 0.0;
  // Monthly fee when the whole capacity is rented.
  double full_month_cost = 0.0;
  double used = 0.0;

  double residual() const { return capacity - used; }
  double unit_cost() const { return full_month_cost / capacity; }
};

/// Uplink from a child site to its parent one tier closer to the cloud.
struct Link {
  LinkId id;
  SiteId child;
  SiteId parent;
  double bandwidth_limit = 0.0;  // Mbps
  double month_cost = 0.0;       // USD/month for the full bandwidth
  double used = 0.0;             // Mbps

  double residual() const { return bandwidth_limit - used; }
};

struct Site {
  SiteId id;
  Tier tier = Tier::Cloud;
  std::optional<LinkId> parent_link;
  std::vector<DeviceId> devices;
};

/// Three-tier tree of sites together with the capacity ledger of every
/// device and link. Sites are added root-first; each non-cloud site hangs
/// off exactly one parent in the adjacent tier, so the upward path from any
/// user-edge site is unique.
class Topology {
 public:
  SiteId add_cloud_site();
  /// Adds a site one tier below `parent` and the uplink connecting them.
  SiteId add_child_site(SiteId parent, double bandwidth_limit, double month_cost);
  DeviceId add_device(SiteId site, DeviceKind kind, double capacity,
                      double full_month_cost);
  InputNodeId add_input_node(SiteId user_edge_site);

  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<Device>& devices() const { return devices_; }
  const std::vector<Link>& links() const { return links_; }
  std::size_t input_node_count() const { return input_home_.size(); }

  const Site& site(SiteId id) const;
  const Device& device(DeviceId id) const;
  const Link& link(LinkId id) const;
  SiteId home_site(InputNodeId node) const;
  std::optional<SiteId> parent_site(SiteId site) const;

  /// Sites from the origin's home user edge up to its cloud root.
  std::vector<SiteId> branch(InputNodeId origin) const;

  /// Uplinks traversed from the origin's home site up to `target`. Empty
  /// when the target is the home site. Throws UnreachableSite when the
  /// target is not on the origin's branch.
  std::vector<LinkId> path(InputNodeId origin, SiteId target) const;

  /// Reserves `resource_demand` on the device and `bandwidth_demand` on every
  /// listed link, or nothing at all. Throws CapacityViolation if any limit
  /// would be exceeded.
  void commit(DeviceId device, double resource_demand, std::span<const LinkId> links,
              double bandwidth_demand);
  bool fits(DeviceId device, double resource_demand, std::span<const LinkId> links,
            double bandwidth_demand) const;

  /// Clears every `used` field.
  void reset_ledger();

  /// True when 0 <= used <= limit holds on every device and link.
  bool ledger_safe() const;

 private:
  std::vector<Site> sites_;
  std::vector<Device> devices_;
  std::vector<Link> links_;
  std::vector<SiteId> input_home_;
};

}  // namespace edgeplace
