#include "edgeplace/appmodel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "edgeplace/error.hpp"

namespace edgeplace {

namespace {

// 53 high bits of one draw mapped onto [0, 1). Avoids the standard
// distributions, whose algorithms differ between library vendors.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick_index(double u, std::size_t n) {
  auto i = static_cast<std::size_t>(u * static_cast<double>(n));
  return i < n ? i : n - 1;
}

std::size_t pick_weighted(double u, const std::vector<AppOffer>& offers) {
  double total = 0.0;
  for (const AppOffer& o : offers) total += o.weight;
  double acc = 0.0;
  for (std::size_t i = 0; i < offers.size(); ++i) {
    acc += offers[i].weight;
    if (u * total < acc) return i;
  }
  return offers.size() - 1;
}

template <typename Cap>
std::vector<Requirement> ladder_from(const std::vector<double>& caps) {
  std::vector<Requirement> out;
  out.reserve(caps.size());
  for (double c : caps) out.emplace_back(Cap{c});
  return out;
}

void validate_offers(const std::vector<AppOffer>& offers) {
  if (offers.empty()) throw std::invalid_argument("no applications to draw from");
  for (const AppOffer& o : offers) {
    validate(o.profile);
    if (!(o.weight > 0.0)) {
      throw std::invalid_argument("application weight must be positive: " + o.profile.name);
    }
    if (o.cost_caps.empty() && o.response_caps.empty()) {
      throw std::invalid_argument("empty requirement menu: " + o.profile.name);
    }
    if (!o.cost_caps.empty()) validate_ladder(ladder_from<CostCap>(o.cost_caps));
    if (!o.response_caps.empty()) validate_ladder(ladder_from<ResponseCap>(o.response_caps));
  }
}

}  // namespace

const Variant* AppProfile::variant(DeviceKind kind) const {
  auto it = variants.find(kind);
  return it == variants.end() ? nullptr : &it->second;
}

void validate(const AppProfile& profile) {
  if (profile.variants.empty()) {
    throw ScenarioError("application " + profile.name + " has no device variant");
  }
  if (profile.bandwidth_demand < 0.0 || profile.data_size < 0.0) {
    throw ScenarioError("application " + profile.name + " has a negative demand");
  }
  for (const auto& [kind, v] : profile.variants) {
    if (v.processing_time < 0.0 || v.resource_demand < 0.0) {
      throw ScenarioError("application " + profile.name + " has a negative " +
                          std::string(to_string(kind)) + " figure");
    }
  }
  if (profile.bandwidth_demand == 0.0 && profile.data_size > 0.0) {
    throw ScenarioError("application " + profile.name +
                        " transfers data but reserves no bandwidth");
  }
}

double limit_of(const Requirement& req) {
  return std::visit([](const auto& r) { return r.limit; }, req);
}

std::string_view kind_name(const Requirement& req) {
  return std::holds_alternative<CostCap>(req) ? "cost" : "response";
}

void validate_ladder(const std::vector<Requirement>& ladder) {
  if (ladder.empty()) throw std::invalid_argument("empty requirement ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(limit_of(ladder[i]) > 0.0)) {
      throw std::invalid_argument("requirement limits must be positive");
    }
    if (i == 0) continue;
    if (ladder[i].index() != ladder[0].index()) {
      throw std::invalid_argument("ladder mixes cost and response requirements");
    }
    if (!(limit_of(ladder[i]) > limit_of(ladder[i - 1]))) {
      throw std::invalid_argument("ladder limits must strictly increase");
    }
  }
}

std::string_view to_string(RequestPattern pattern) {
  switch (pattern) {
    case RequestPattern::P1:
      return "p1";
    case RequestPattern::P2:
      return "p2";
    case RequestPattern::P3:
      return "p3";
  }
  return "?";
}

std::optional<RequestPattern> parse_pattern(std::string_view text) {
  if (text == "p1" || text == "P1") return RequestPattern::P1;
  if (text == "p2" || text == "P2") return RequestPattern::P2;
  if (text == "p3" || text == "P3") return RequestPattern::P3;
  return std::nullopt;
}

std::vector<AppProfile> default_profiles() {
  AppProfile nas_ft;
  nas_ft.name = "NAS.FT";
  nas_ft.variants[DeviceKind::GPU] = Variant{5.8, 1.0};
  nas_ft.bandwidth_demand = 2.0;
  nas_ft.data_size = 0.2;

  AppProfile mri_q;
  mri_q.name = "MRI-Q";
  mri_q.variants[DeviceKind::FPGA] = Variant{2.0, 10.0};
  mri_q.bandwidth_demand = 1.0;
  mri_q.data_size = 0.15;

  return {nas_ft, mri_q};
}

std::vector<AppOffer> default_offers() {
  auto profiles = default_profiles();
  return {
      AppOffer{profiles[0], 3.0, {70.0, 85.0, 100.0}, {6.0, 7.0, 10.0}},
      AppOffer{profiles[1], 1.0, {125.0, 200.0}, {4.0, 8.0}},
  };
}

std::vector<PlacementRequest> generate_requests(RequestPattern pattern, std::int64_t n,
                                                std::uint64_t seed,
                                                const Topology& topology,
                                                const std::vector<AppOffer>& offers) {
  std::vector<PlacementRequest> out;
  if (n <= 0) return out;
  validate_offers(offers);
  const std::size_t nodes = topology.input_node_count();
  if (nodes == 0) throw std::invalid_argument("topology has no input nodes");

  std::mt19937_64 rng(seed);
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const double u_app = uniform01(rng);
    const double u_origin = uniform01(rng);
    const double u_menu = uniform01(rng);

    const AppOffer& offer = offers[pick_weighted(u_app, offers)];
    PlacementRequest req;
    req.id = static_cast<std::uint64_t>(i);
    req.profile = offer.profile;
    req.origin = InputNodeId{pick_index(u_origin, nodes)};

    switch (pattern) {
      case RequestPattern::P1: {
        const std::size_t menu = offer.cost_caps.size() + offer.response_caps.size();
        const std::size_t k = pick_index(u_menu, menu);
        if (k < offer.cost_caps.size()) {
          req.ladder = {CostCap{offer.cost_caps[k]}};
        } else {
          req.ladder = {ResponseCap{offer.response_caps[k - offer.cost_caps.size()]}};
        }
        break;
      }
      case RequestPattern::P2:
        if (offer.cost_caps.empty()) {
          throw std::invalid_argument("no cost caps for " + offer.profile.name);
        }
        req.ladder = ladder_from<CostCap>(offer.cost_caps);
        break;
      case RequestPattern::P3:
        if (offer.response_caps.empty()) {
          throw std::invalid_argument("no response caps for " + offer.profile.name);
        }
        req.ladder = ladder_from<ResponseCap>(offer.response_caps);
        break;
    }
    out.push_back(std::move(req));
  }
  return out;
}

std::vector<PlacementRequest> generate_requests(RequestPattern pattern, std::int64_t n,
                                                std::uint64_t seed,
                                                const Topology& topology) {
  return generate_requests(pattern, n, seed, topology, default_offers());
}

}  // namespace edgeplace
