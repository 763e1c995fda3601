#include "edgeplace/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "edgeplace/error.hpp"

namespace edgeplace {

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::Cloud:
      return "cloud";
    case Tier::CarrierEdge:
      return "carrier_edge";
    case Tier::UserEdge:
      return "user_edge";
  }
  return "?";
}

std::string_view to_string(DeviceKind kind) {
  switch (kind) {
    case DeviceKind::CPU:
      return "CPU";
    case DeviceKind::GPU:
      return "GPU";
    case DeviceKind::FPGA:
      return "FPGA";
  }
  return "?";
}

std::optional<Tier> parse_tier(std::string_view text) {
  for (Tier t : kAllTiers) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

std::optional<DeviceKind> parse_device_kind(std::string_view text) {
  for (DeviceKind k : kAllDeviceKinds) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

SiteId Topology::add_cloud_site() {
  SiteId id{sites_.size()};
  sites_.push_back(Site{id, Tier::Cloud, std::nullopt, {}});
  return id;
}

SiteId Topology::add_child_site(SiteId parent, double bandwidth_limit,
                                double month_cost) {
  const Site& p = site(parent);
  if (p.tier == Tier::UserEdge) {
    throw std::invalid_argument("user-edge sites cannot have children");
  }
  if (!(bandwidth_limit > 0.0) || month_cost < 0.0) {
    throw std::invalid_argument("link needs positive bandwidth and non-negative cost");
  }
  const Tier tier = p.tier == Tier::Cloud ? Tier::CarrierEdge : Tier::UserEdge;
  SiteId id{sites_.size()};
  LinkId link_id{links_.size()};
  links_.push_back(Link{link_id, id, parent, bandwidth_limit, month_cost, 0.0});
  sites_.push_back(Site{id, tier, link_id, {}});
  return id;
}

DeviceId Topology::add_device(SiteId site_id, DeviceKind kind, double capacity,
                              double full_month_cost) {
  if (!(capacity > 0.0) || full_month_cost < 0.0) {
    throw std::invalid_argument("device needs positive capacity and non-negative cost");
  }
  (void)site(site_id);
  DeviceId id{devices_.size()};
  devices_.push_back(Device{id, site_id, kind, capacity, full_month_cost, 0.0});
  sites_[site_id.value].devices.push_back(id);
  return id;
}

InputNodeId Topology::add_input_node(SiteId user_edge_site) {
  if (site(user_edge_site).tier != Tier::UserEdge) {
    throw std::invalid_argument("input nodes attach to user-edge sites only");
  }
  InputNodeId id{input_home_.size()};
  input_home_.push_back(user_edge_site);
  return id;
}

const Site& Topology::site(SiteId id) const {
  if (id.value >= sites_.size()) throw std::out_of_range("unknown site id");
  return sites_[id.value];
}

const Device& Topology::device(DeviceId id) const {
  if (id.value >= devices_.size()) throw std::out_of_range("unknown device id");
  return devices_[id.value];
}

const Link& Topology::link(LinkId id) const {
  if (id.value >= links_.size()) throw std::out_of_range("unknown link id");
  return links_[id.value];
}

SiteId Topology::home_site(InputNodeId node) const {
  if (node.value >= input_home_.size()) throw std::out_of_range("unknown input node");
  return input_home_[node.value];
}

std::optional<SiteId> Topology::parent_site(SiteId id) const {
  const Site& s = site(id);
  if (!s.parent_link) return std::nullopt;
  return links_[s.parent_link->value].parent;
}

std::vector<SiteId> Topology::branch(InputNodeId origin) const {
  std::vector<SiteId> out;
  std::optional<SiteId> cur = home_site(origin);
  while (cur) {
    out.push_back(*cur);
    cur = parent_site(*cur);
  }
  return out;
}

std::vector<LinkId> Topology::path(InputNodeId origin, SiteId target) const {
  std::vector<LinkId> links;
  SiteId cur = home_site(origin);
  while (cur != target) {
    const Site& s = site(cur);
    if (!s.parent_link) {
      std::ostringstream msg;
      msg << "unreachable site " << target << " from input node " << origin;
      throw UnreachableSite(msg.str());
    }
    links.push_back(*s.parent_link);
    cur = links_[s.parent_link->value].parent;
  }
  return links;
}

bool Topology::fits(DeviceId device_id, double resource_demand,
                    std::span<const LinkId> links, double bandwidth_demand) const {
  const Device& d = device(device_id);
  if (!(d.used + resource_demand <= d.capacity)) return false;
  return std::all_of(links.begin(), links.end(), [&](LinkId l) {
    const Link& lk = link(l);
    return lk.used + bandwidth_demand <= lk.bandwidth_limit;
  });
}

void Topology::commit(DeviceId device_id, double resource_demand,
                      std::span<const LinkId> links, double bandwidth_demand) {
  if (resource_demand < 0.0 || bandwidth_demand < 0.0) {
    throw std::invalid_argument("negative demand");
  }
  if (!fits(device_id, resource_demand, links, bandwidth_demand)) {
    std::ostringstream msg;
    msg << "capacity violation committing " << resource_demand << " on device "
        << device_id << " and " << bandwidth_demand << " Mbps on " << links.size()
        << " link(s)";
    throw CapacityViolation(msg.str());
  }
  devices_[device_id.value].used += resource_demand;
  for (LinkId l : links) links_[l.value].used += bandwidth_demand;
}

void Topology::reset_ledger() {
  for (Device& d : devices_) d.used = 0.0;
  for (Link& l : links_) l.used = 0.0;
}

bool Topology::ledger_safe() const {
  const bool devices_ok = std::all_of(devices_.begin(), devices_.end(), [](const Device& d) {
    return d.used >= 0.0 && d.used <= d.capacity;
  });
  const bool links_ok = std::all_of(links_.begin(), links_.end(), [](const Link& l) {
    return l.used >= 0.0 && l.used <= l.bandwidth_limit;
  });
  return devices_ok && links_ok;
}

}  // namespace edgeplace
