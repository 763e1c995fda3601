#include "edgeplace/placement.hpp"

#include <algorithm>
#include <tuple>

#include "edgeplace/error.hpp"

namespace edgeplace {

namespace {

const Variant& require_variant(const AppProfile& profile, DeviceKind kind) {
  const Variant* v = profile.variant(kind);
  if (v == nullptr) {
    throw IneligibleDevice("ineligible device kind " + std::string(to_string(kind)) +
                           " for " + profile.name);
  }
  return *v;
}

std::vector<Link> resolve(const Topology& topology, std::span<const LinkId> ids) {
  std::vector<Link> out;
  out.reserve(ids.size());
  for (LinkId id : ids) out.push_back(topology.link(id));
  return out;
}

}  // namespace

double transfer_time(double data_size, double bandwidth) {
  if (data_size == 0.0) return 0.0;
  return 8.0 * data_size / bandwidth;
}

double response_time(const AppProfile& profile, const Device& device,
                     std::span<const Link> links) {
  const Variant& v = require_variant(profile, device.kind);
  double r = v.processing_time;
  for (std::size_t i = 0; i < links.size(); ++i) {
    r += transfer_time(profile.data_size, profile.bandwidth_demand);
  }
  return r;
}

double price(const AppProfile& profile, const Device& device, std::span<const Link> links) {
  const Variant& v = require_variant(profile, device.kind);
  double p = device.full_month_cost * v.resource_demand / device.capacity;
  for (const Link& l : links) {
    p += l.month_cost * profile.bandwidth_demand / l.bandwidth_limit;
  }
  return p;
}

Candidate evaluate(const PlacementRequest& request, const Topology& topology,
                   DeviceId device_id) {
  const Device& d = topology.device(device_id);
  Candidate c;
  c.device = device_id;
  c.tier = topology.site(d.site).tier;
  c.links = topology.path(request.origin, d.site);
  const std::vector<Link> links = resolve(topology, c.links);
  c.price = price(request.profile, d, links);
  c.response_time = response_time(request.profile, d, links);
  return c;
}

std::vector<Candidate> enumerate_candidates(const PlacementRequest& request,
                                            const Topology& topology) {
  std::vector<Candidate> out;
  for (SiteId s : topology.branch(request.origin)) {
    for (DeviceId id : topology.site(s).devices) {
      const Device& d = topology.device(id);
      const Variant* v = request.profile.variant(d.kind);
      if (v == nullptr) continue;
      Candidate c = evaluate(request, topology, id);
      if (!topology.fits(id, v->resource_demand, c.links, request.profile.bandwidth_demand)) {
        continue;
      }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.device < b.device; });
  return out;
}

bool satisfies(const Candidate& c, const Requirement& req) {
  if (const auto* cost = std::get_if<CostCap>(&req)) return c.price <= cost->limit;
  return c.response_time <= std::get<ResponseCap>(req).limit;
}

double objective(const Candidate& c, const Requirement& req) {
  return std::holds_alternative<CostCap>(req) ? c.response_time : c.price;
}

std::optional<Candidate> best_candidate(std::span<const Candidate> candidates,
                                        const Requirement& req) {
  const bool cost_mode = std::holds_alternative<CostCap>(req);
  auto key = [cost_mode](const Candidate& c) {
    return cost_mode ? std::make_tuple(c.response_time, c.price, c.device)
                     : std::make_tuple(c.price, c.response_time, c.device);
  };
  const Candidate* best = nullptr;
  for (const Candidate& c : candidates) {
    if (!satisfies(c, req)) continue;
    if (best == nullptr || key(c) < key(*best)) best = &c;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

PlacementDecision decide(const PlacementRequest& request, const Topology& topology) {
  validate_ladder(request.ladder);
  const std::vector<Candidate> candidates = enumerate_candidates(request, topology);
  if (candidates.empty()) return Rejected{"no residual capacity on branch"};
  for (const Requirement& rung : request.ladder) {
    if (auto best = best_candidate(candidates, rung)) {
      return Placed{std::move(*best), rung};
    }
  }
  return Rejected{"no candidate meets any requirement"};
}

void commit(const Placed& placed, const AppProfile& profile, Topology& topology) {
  const Candidate& c = placed.candidate;
  const Variant& v = require_variant(profile, topology.device(c.device).kind);
  topology.commit(c.device, v.resource_demand, c.links, profile.bandwidth_demand);
}

PlacementDecision solve(const PlacementRequest& request, Topology& topology) {
  PlacementDecision decision = decide(request, topology);
  if (const auto* placed = std::get_if<Placed>(&decision)) {
    commit(*placed, request.profile, topology);
  }
  return decision;
}

std::string lp_file_name(const PlacementRequest& request) {
  return "request_" + std::to_string(request.id) + ".lp";
}

}  // namespace edgeplace
