#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "edgeplace/error.hpp"
#include "edgeplace/placement.hpp"
#include "edgeplace/scenario.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace edgeplace {
namespace {

using testing::dual_variant_app;
using testing::make_request;
using testing::mri_q;
using testing::nas_ft;

// Hand evaluation of the price and response formulas for the default
// scenario. Link fees: 50 USD per 30 Mbps (user uplink), 80 USD per 100 Mbps
// (carrier uplink). Transfers: 8 * data_MB / app_Mbps per link.
const double kFtCloudPrice = 1.0 * 1000.0 / 16.0 + 50.0 * 2.0 / 30.0 + 80.0 * 2.0 / 100.0;
const double kFtCarrierPrice = 1.0 * 1000.0 / 16.0 * 1.25 + 50.0 * 2.0 / 30.0;
const double kFtUserPrice = 1.0 * 1000.0 / 16.0 * 1.5;
const double kMqCloudPrice = 10.0 * 12.0 + 50.0 * 1.0 / 30.0 + 80.0 * 1.0 / 100.0;
const double kMqCarrierPrice = 10.0 * 12.0 * 1.25 + 50.0 * 1.0 / 30.0;

class DefaultTopology : public ::testing::Test {
 protected:
  Topology topo = build_default_scenario();

  const Candidate& on_tier(const std::vector<Candidate>& cs, Tier tier) {
    for (const Candidate& c : cs) {
      if (c.tier == tier) return c;
    }
    throw std::runtime_error("no candidate on tier");
  }

  DeviceId first_device(SiteId site, DeviceKind kind) {
    for (DeviceId id : topo.site(site).devices) {
      if (topo.device(id).kind == kind) return id;
    }
    throw std::runtime_error("no such device");
  }
};

TEST_F(DefaultTopology, ResponseTimeExamples) {
  const InputNodeId n{0};
  const auto br = topo.branch(n);
  auto links_to = [&](SiteId s) {
    std::vector<Link> out;
    for (LinkId id : topo.path(n, s)) out.push_back(topo.link(id));
    return out;
  };
  const Device& cloud_gpu = topo.device(first_device(br[2], DeviceKind::GPU));
  const Device& user_gpu = topo.device(first_device(br[0], DeviceKind::GPU));
  const Device& carrier_fpga = topo.device(first_device(br[1], DeviceKind::FPGA));

  EXPECT_NEAR(response_time(nas_ft(), cloud_gpu, links_to(br[2])), 5.8 + 2 * (8 * 0.2 / 2), 1e-12);
  EXPECT_NEAR(response_time(nas_ft(), cloud_gpu, links_to(br[2])), 7.4, 1e-12);
  EXPECT_NEAR(response_time(nas_ft(), user_gpu, links_to(br[0])), 5.8, 1e-12);
  EXPECT_NEAR(response_time(mri_q(), carrier_fpga, links_to(br[1])), 3.2, 1e-12);
  EXPECT_THROW(response_time(nas_ft(), carrier_fpga, links_to(br[1])), IneligibleDevice);
  EXPECT_THROW(price(mri_q(), cloud_gpu, links_to(br[2])), IneligibleDevice);
}

TEST_F(DefaultTopology, PriceExamples) {
  const auto ft = enumerate_candidates(make_request(nas_ft(), 0, {CostCap{1000}}), topo);
  EXPECT_NEAR(on_tier(ft, Tier::Cloud).price, kFtCloudPrice, 1e-9);
  EXPECT_NEAR(on_tier(ft, Tier::Cloud).price, 67.43, 0.005);
  EXPECT_NEAR(on_tier(ft, Tier::CarrierEdge).price, kFtCarrierPrice, 1e-9);
  EXPECT_NEAR(on_tier(ft, Tier::CarrierEdge).price, 81.46, 0.005);
  EXPECT_NEAR(on_tier(ft, Tier::UserEdge).price, 93.75, 1e-9);
  EXPECT_NEAR(kFtUserPrice, 93.75, 1e-12);

  const auto mq = enumerate_candidates(make_request(mri_q(), 0, {CostCap{1000}}), topo);
  EXPECT_NEAR(on_tier(mq, Tier::Cloud).price, kMqCloudPrice, 1e-9);
  EXPECT_NEAR(on_tier(mq, Tier::Cloud).price, 122.47, 0.005);
  EXPECT_NEAR(on_tier(mq, Tier::CarrierEdge).price, kMqCarrierPrice, 1e-9);
  EXPECT_NEAR(on_tier(mq, Tier::CarrierEdge).price, 151.67, 0.005);
  EXPECT_NEAR(on_tier(mq, Tier::Cloud).response_time, 4.4, 1e-12);
}

TEST_F(DefaultTopology, CandidateCountsOnFreshBranch) {
  for (std::size_t origin : {0u, 17u, 299u}) {
    const auto ft = enumerate_candidates(make_request(nas_ft(), origin, {CostCap{70}}), topo);
    EXPECT_EQ(ft.size(), 1u + 2u + 4u);
    const auto mq = enumerate_candidates(make_request(mri_q(), origin, {CostCap{125}}), topo);
    EXPECT_EQ(mq.size(), 1u + 2u);
    for (const Candidate& c : ft) {
      EXPECT_EQ(c.links, topo.path(InputNodeId{origin}, topo.device(c.device).site));
      EXPECT_GE(c.response_time, 5.8);
      EXPECT_GE(c.price, topo.device(c.device).unit_cost() * 1.0);
    }
  }
}

TEST_F(DefaultTopology, SaturatedBranchHasNoCandidates) {
  const InputNodeId n{0};
  for (SiteId s : topo.branch(n)) {
    for (DeviceId id : topo.site(s).devices) {
      topo.commit(id, topo.device(id).capacity, {}, 0.0);
    }
  }
  const auto req = make_request(nas_ft(), 0, {CostCap{1000}});
  EXPECT_TRUE(enumerate_candidates(req, topo).empty());
  EXPECT_TRUE(std::holds_alternative<Rejected>(decide(req, topo)));
  EXPECT_THROW(export_lp(req, topo), EmptyModel);
}

TEST_F(DefaultTopology, CapTierCorrespondence) {
  auto tiers_admitted = [&](const AppProfile& app, Requirement req) {
    std::set<Tier> out;
    for (const Candidate& c : enumerate_candidates(make_request(app, 3, {req}), topo)) {
      if (satisfies(c, req)) out.insert(c.tier);
    }
    return out;
  };
  using S = std::set<Tier>;
  EXPECT_EQ(tiers_admitted(nas_ft(), CostCap{70}), (S{Tier::Cloud}));
  EXPECT_EQ(tiers_admitted(nas_ft(), CostCap{85}), (S{Tier::Cloud, Tier::CarrierEdge}));
  EXPECT_EQ(tiers_admitted(nas_ft(), CostCap{100}),
            (S{Tier::Cloud, Tier::CarrierEdge, Tier::UserEdge}));
  EXPECT_EQ(tiers_admitted(nas_ft(), ResponseCap{6}), (S{Tier::UserEdge}));
  EXPECT_EQ(tiers_admitted(nas_ft(), ResponseCap{7}), (S{Tier::UserEdge, Tier::CarrierEdge}));
  EXPECT_EQ(tiers_admitted(nas_ft(), ResponseCap{10}),
            (S{Tier::Cloud, Tier::CarrierEdge, Tier::UserEdge}));
  EXPECT_EQ(tiers_admitted(mri_q(), CostCap{125}), (S{Tier::Cloud}));
  EXPECT_EQ(tiers_admitted(mri_q(), CostCap{200}), (S{Tier::Cloud, Tier::CarrierEdge}));
  EXPECT_EQ(tiers_admitted(mri_q(), ResponseCap{4}), (S{Tier::CarrierEdge}));
  EXPECT_EQ(tiers_admitted(mri_q(), ResponseCap{8}), (S{Tier::Cloud, Tier::CarrierEdge}));
}

TEST_F(DefaultTopology, SolveCostCapPicksCloud) {
  const auto decision = solve(make_request(nas_ft(), 0, {CostCap{70}}), topo);
  const auto* placed = std::get_if<Placed>(&decision);
  ASSERT_NE(placed, nullptr);
  EXPECT_EQ(placed->candidate.tier, Tier::Cloud);
  EXPECT_NEAR(placed->candidate.price, 67.43, 0.005);
  EXPECT_NEAR(placed->candidate.response_time, 7.4, 1e-12);
  // Lowest device id among the equal cloud GPUs, now holding 1 GB.
  const auto cloud = topo.branch(InputNodeId{0})[2];
  EXPECT_EQ(placed->candidate.device, first_device(cloud, DeviceKind::GPU));
  EXPECT_EQ(topo.device(placed->candidate.device).used, 1.0);
  for (LinkId l : placed->candidate.links) EXPECT_EQ(topo.link(l).used, 2.0);
}

TEST_F(DefaultTopology, SolveResponseCapPicksUserEdge) {
  const auto decision = solve(make_request(nas_ft(), 0, {ResponseCap{6}}), topo);
  const auto* placed = std::get_if<Placed>(&decision);
  ASSERT_NE(placed, nullptr);
  EXPECT_EQ(placed->candidate.tier, Tier::UserEdge);
  EXPECT_NEAR(placed->candidate.response_time, 5.8, 1e-12);
  EXPECT_TRUE(placed->candidate.links.empty());
}

TEST_F(DefaultTopology, LadderEscalatesWhenCarrierFpgaFull) {
  const auto br = topo.branch(InputNodeId{0});
  const DeviceId fpga = first_device(br[1], DeviceKind::FPGA);
  topo.commit(fpga, 100.0, {}, 0.0);
  const auto decision =
      solve(make_request(mri_q(), 0, {ResponseCap{4}, ResponseCap{8}}), topo);
  const auto* placed = std::get_if<Placed>(&decision);
  ASSERT_NE(placed, nullptr);
  EXPECT_EQ(placed->candidate.tier, Tier::Cloud);
  EXPECT_NEAR(placed->candidate.response_time, 4.4, 1e-12);
  EXPECT_EQ(placed->requirement_used, Requirement{ResponseCap{8}});
}

TEST_F(DefaultTopology, RejectedWhenNoRungFits) {
  const auto before = topo.devices();
  const auto decision = solve(make_request(nas_ft(), 0, {CostCap{50}, CostCap{60}}), topo);
  EXPECT_TRUE(std::holds_alternative<Rejected>(decision));
  for (std::size_t i = 0; i < before.size(); ++i) EXPECT_EQ(topo.devices()[i].used, 0.0);
}

TEST_F(DefaultTopology, CpuFallbackEqualPriceFasterWins) {
  const auto app = dual_variant_app(10.0, 1.0, 6.0, 1.0);
  const auto d = decide(make_request(app, 0, {CostCap{70}}), topo);
  const auto& placed = std::get<Placed>(d);
  EXPECT_EQ(topo.device(placed.candidate.device).kind, DeviceKind::GPU);
  EXPECT_EQ(placed.candidate.tier, Tier::Cloud);
}

TEST_F(DefaultTopology, CpuFallbackWhenGpuBreaksCap) {
  // GPU needs 2 GB: 125 USD before links, over the 100 USD cap on every tier.
  const auto app = dual_variant_app(10.0, 1.0, 6.0, 2.0);
  const auto d = decide(make_request(app, 0, {CostCap{100}}), topo);
  const auto& placed = std::get<Placed>(d);
  EXPECT_EQ(topo.device(placed.candidate.device).kind, DeviceKind::CPU);
  EXPECT_LE(placed.candidate.price, 100.0);
}

TEST_F(DefaultTopology, CpuFallbackResponseCapTakesCheaper) {
  const auto app = dual_variant_app(10.0, 1.0, 6.0, 2.0);
  const auto d = decide(make_request(app, 0, {ResponseCap{12}}), topo);
  const auto& placed = std::get<Placed>(d);
  EXPECT_EQ(topo.device(placed.candidate.device).kind, DeviceKind::CPU);
  EXPECT_NEAR(placed.candidate.price, kFtCloudPrice, 1e-9);
}

TEST_F(DefaultTopology, ScaleCoherence) {
  AppProfile doubled = nas_ft();
  doubled.data_size *= 2.0;
  doubled.bandwidth_demand *= 2.0;
  const auto a = enumerate_candidates(make_request(nas_ft(), 0, {CostCap{1e9}}), topo);
  const auto b = enumerate_candidates(make_request(doubled, 0, {CostCap{1e9}}), topo);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].response_time, b[i].response_time, 1e-12);
    const double device_term = topo.device(a[i].device).unit_cost();
    EXPECT_NEAR(b[i].price - device_term, 2.0 * (a[i].price - device_term), 1e-9);
  }
}

TEST(TransferTime, ZeroDataIsFree) {
  EXPECT_EQ(transfer_time(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(transfer_time(0.2, 2.0), 0.8);
}

// Solver against the brute-force oracle on random ledgers and requirements.
TEST(SolverProperty, MatchesBruteForce) {
  Topology topo = build_default_scenario();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> cost(40.0, 220.0), resp(1.5, 12.0);
  const std::vector<AppProfile> apps = {nas_ft(), mri_q(), dual_variant_app(10, 1, 6, 2)};
  int placed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    testing::randomize_ledger(topo, rng);
    const AppProfile& app = apps[rng() % apps.size()];
    const bool cost_mode = rng() % 2 == 0;
    std::vector<double> caps(1 + rng() % 3);
    for (double& c : caps) c = cost_mode ? cost(rng) : resp(rng);
    std::sort(caps.begin(), caps.end());
    caps.erase(std::unique(caps.begin(), caps.end()), caps.end());
    std::vector<Requirement> ladder;
    for (double c : caps) {
      ladder.push_back(cost_mode ? Requirement{CostCap{c}} : Requirement{ResponseCap{c}});
    }
    const auto req = make_request(app, rng() % topo.input_node_count(), ladder);

    const auto expected = oracle::brute_force(req, topo);
    const auto got = decide(req, topo);
    if (!expected) {
      EXPECT_TRUE(std::holds_alternative<Rejected>(got)) << "trial " << trial;
      continue;
    }
    ++placed;
    const auto* p = std::get_if<Placed>(&got);
    ASSERT_NE(p, nullptr) << "trial " << trial;
    EXPECT_EQ(p->candidate.device, expected->device) << "trial " << trial;
    EXPECT_EQ(p->requirement_used, ladder[expected->rung]);
    EXPECT_NEAR(objective(p->candidate, p->requirement_used),
                cost_mode ? expected->response : expected->price, 1e-9);
  }
  EXPECT_GT(placed, 50);
}

TEST(SolverProperty, LooseningCapNeverWorsensObjective) {
  Topology topo = build_default_scenario();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> cost(60.0, 200.0), resp(3.0, 10.0), step(0.0, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    testing::randomize_ledger(topo, rng);
    const AppProfile& app = rng() % 2 ? nas_ft() : mri_q();
    const std::size_t origin = rng() % topo.input_node_count();
    const bool cost_mode = rng() % 2 == 0;
    const double tight = cost_mode ? cost(rng) : resp(rng);
    const double loose = tight + (cost_mode ? step(rng) : step(rng) / 5.0);
    auto mk = [&](double c) {
      return cost_mode ? Requirement{CostCap{c}} : Requirement{ResponseCap{c}};
    };
    const auto a = decide(make_request(app, origin, {mk(tight)}), topo);
    const auto b = decide(make_request(app, origin, {mk(loose)}), topo);
    if (const auto* pa = std::get_if<Placed>(&a)) {
      const auto* pb = std::get_if<Placed>(&b);
      ASSERT_NE(pb, nullptr);
      EXPECT_LE(objective(pb->candidate, mk(loose)), objective(pa->candidate, mk(tight)));
    }
  }
}

// Minimal reader for the objective row of an exported model.
std::map<std::string, double> objective_terms(const std::string& lp) {
  std::map<std::string, double> out;
  const auto start = lp.find("obj:");
  const auto stop = lp.find("Subject To");
  std::istringstream in(lp.substr(start + 4, stop - start - 4));
  std::string tok;
  double sign = 1.0;
  while (in >> tok) {
    if (tok == "+") {
      sign = 1.0;
    } else if (tok == "-") {
      sign = -1.0;
    } else {
      std::string var;
      in >> var;
      out[var] = sign * std::stod(tok);
      sign = 1.0;
    }
  }
  return out;
}

TEST_F(DefaultTopology, LpExportStructure) {
  const auto req = make_request(nas_ft(), 0, {CostCap{70}});
  const std::string lp = export_lp(req, topo);
  for (const char* section : {"Minimize", "Subject To", "Binary", "End"}) {
    EXPECT_NE(lp.find(section), std::string::npos) << section;
  }
  const auto terms = objective_terms(lp);
  int dvars = 0, lvars = 0;
  for (const auto& [var, coef] : terms) {
    if (var[0] == 'd') {
      ++dvars;
      EXPECT_EQ(coef, 5.8);
    } else {
      ++lvars;
      EXPECT_DOUBLE_EQ(coef, 0.8);
    }
  }
  EXPECT_EQ(dvars, 7);
  EXPECT_EQ(lvars, 2);

  // Objective at the solver's choice equals its response time.
  const auto decision = decide(req, topo);
  const auto& placed = std::get<Placed>(decision);
  double value = terms.at("d" + std::to_string(placed.candidate.device.value));
  for (LinkId l : placed.candidate.links) value += terms.at("l" + std::to_string(l.value));
  EXPECT_NEAR(value, 7.4, 1e-12);
  EXPECT_EQ(lp_file_name(PlacementRequest{42, nas_ft(), InputNodeId{0}, {CostCap{70}}}),
            "request_42.lp");
}

TEST_F(DefaultTopology, LpExportResponseModeMinimisesPrice) {
  const auto req = make_request(mri_q(), 0, {ResponseCap{4}});
  const std::string lp = export_lp(req, topo);
  const auto terms = objective_terms(lp);
  EXPECT_EQ(terms.size(), 3u + 2u);
  EXPECT_NE(lp.find(" requirement:"), std::string::npos);
  EXPECT_NE(lp.find("<= 4\n"), std::string::npos);
}

TEST_F(DefaultTopology, LpExportZeroDataHasZeroLinkCoefficients) {
  AppProfile app = nas_ft();
  app.data_size = 0.0;
  const auto terms = objective_terms(export_lp(make_request(app, 0, {CostCap{100}}), topo));
  int links = 0;
  for (const auto& [var, coef] : terms) {
    if (var[0] == 'l') {
      ++links;
      EXPECT_EQ(coef, 0.0);
    }
  }
  EXPECT_EQ(links, 2);
}

}  // namespace
}  // namespace edgeplace
