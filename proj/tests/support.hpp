#pragma once

#include <random>
#include <vector>

#include "edgeplace/appmodel.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace::testing {

inline PlacementRequest make_request(const AppProfile& app, std::size_t origin,
                                     std::vector<Requirement> ladder, std::uint64_t id = 0) {
  return PlacementRequest{id, app, InputNodeId{origin}, std::move(ladder)};
}

inline const AppProfile& nas_ft() {
  static const AppProfile p = default_profiles()[0];
  return p;
}

inline const AppProfile& mri_q() {
  static const AppProfile p = default_profiles()[1];
  return p;
}

/// App with both a CPU and a GPU variant.
inline AppProfile dual_variant_app(double cpu_time, double cpu_units, double gpu_time,
                                   double gpu_gb) {
  AppProfile p;
  p.name = "synthetic";
  p.variants[DeviceKind::CPU] = Variant{cpu_time, cpu_units};
  p.variants[DeviceKind::GPU] = Variant{gpu_time, gpu_gb};
  p.bandwidth_demand = 2.0;
  p.data_size = 0.2;
  return p;
}

/// Fills every device and link to a random level. About one in five is
/// left completely full, one in five untouched.
inline void randomize_ledger(Topology& t, std::mt19937_64& rng) {
  t.reset_ledger();
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::uniform_int_distribution<int> mode(0, 4);
  auto level = [&](double cap) {
    switch (mode(rng)) {
      case 0:
        return 0.0;
      case 1:
        return cap;
      default:
        return cap * frac(rng);
    }
  };
  for (const Device& d : t.devices()) t.commit(d.id, level(d.capacity), {}, 0.0);
  const DeviceId any{0};
  for (const Link& l : t.links()) {
    const LinkId ids[] = {l.id};
    t.commit(any, 0.0, ids, level(l.bandwidth_limit));
  }
}

}  // namespace edgeplace::testing
