#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "edgeplace/appmodel.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace {

/// Seconds to push `data_size` MB over one link at `bandwidth` Mbps
/// (1 MB = 8 Mbit). Zero when nothing is sent.
double transfer_time(double data_size, double bandwidth);

/// Processing time on the device plus one transfer per traversed link.
/// Throws IneligibleDevice when the profile has no variant for the device.
double response_time(const AppProfile& profile, const Device& device,
                     std::span<const Link> links);

/// Monthly price: the device's per-unit fee times the resource demand, plus
/// each link's fee prorated by the reserved share of its bandwidth.
double price(const AppProfile& profile, const Device& device, std::span<const Link> links);

/// A device on the origin's branch with the uplinks the data must cross.
struct Candidate {
  DeviceId device;
  Tier tier = Tier::Cloud;
  std::vector<LinkId> links;
  double price = 0.0;
  double response_time = 0.0;
};

/// Evaluates one device as a placement for the request, ignoring the
/// ledger. Throws UnreachableSite or IneligibleDevice.
Candidate evaluate(const PlacementRequest& request, const Topology& topology,
                   DeviceId device);

/// Every eligible device on the origin's branch whose device and links still
/// have room for the request, in ascending device id.
std::vector<Candidate> enumerate_candidates(const PlacementRequest& request,
                                            const Topology& topology);

bool satisfies(const Candidate& c, const Requirement& req);

/// Value the rung minimises: response time under a cost cap, price under a
/// response cap.
double objective(const Candidate& c, const Requirement& req);

/// Best candidate under one requirement. Cost cap: minimum response, then
/// price, then device id. Response cap: minimum price, then response, then
/// device id.
std::optional<Candidate> best_candidate(std::span<const Candidate> candidates,
                                        const Requirement& req);

struct Placed {
  Candidate candidate;
  Requirement requirement_used;
};

struct Rejected {
  std::string reason;
};

using PlacementDecision = std::variant<Placed, Rejected>;

/// Walks the ladder against the current ledger without changing it.
PlacementDecision decide(const PlacementRequest& request, const Topology& topology);

/// Reserves the placed candidate's device and link resources.
void commit(const Placed& placed, const AppProfile& profile, Topology& topology);

/// decide() and, when placed, commit the resources.
PlacementDecision solve(const PlacementRequest& request, Topology& topology);

/// Single-request binary program in CPLEX-LP text. `rung` selects the ladder
/// entry to model (first by default). Throws EmptyModel when no device on the
/// branch can host the application.
std::string export_lp(const PlacementRequest& request, const Topology& topology,
                      std::size_t rung = 0);

/// "request_<id>.lp"
std::string lp_file_name(const PlacementRequest& request);

}  // namespace edgeplace
