#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "edgeplace/error.hpp"
#include "edgeplace/placement.hpp"

namespace edgeplace {

namespace {

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string dvar(DeviceId id) { return "d" + std::to_string(id.value); }
std::string lvar(LinkId id) { return "l" + std::to_string(id.value); }

struct Term {
  double coef;
  std::string var;
};

// Writes " c1 x1 + c2 x2 - c3 x3", wrapping long rows onto continuation lines.
void write_terms(std::ostream& os, const std::vector<Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    if (i > 0 && i % 8 == 0) os << "\n   ";
    const bool neg = t.coef < 0.0;
    if (i == 0) {
      os << (neg ? " - " : " ");
    } else {
      os << (neg ? " - " : " + ");
    }
    os << num(neg ? -t.coef : t.coef) << ' ' << t.var;
  }
}

}  // namespace

std::string export_lp(const PlacementRequest& request, const Topology& topology,
                      std::size_t rung) {
  if (rung >= request.ladder.size()) throw std::out_of_range("ladder rung out of range");
  const Requirement& req = request.ladder[rung];
  const bool cost_mode = std::holds_alternative<CostCap>(req);
  const AppProfile& app = request.profile;

  // Devices that are kind-eligible and still have device room. Link room is
  // left to the capacity rows.
  std::vector<DeviceId> devices;
  std::map<LinkId, std::vector<DeviceId>> users_of_link;
  for (SiteId s : topology.branch(request.origin)) {
    for (DeviceId id : topology.site(s).devices) {
      const Device& d = topology.device(id);
      const Variant* v = app.variant(d.kind);
      if (v == nullptr || !(d.used + v->resource_demand <= d.capacity)) continue;
      devices.push_back(id);
      for (LinkId l : topology.path(request.origin, s)) users_of_link[l].push_back(id);
    }
  }
  if (devices.empty()) {
    throw EmptyModel("empty model: no device on the branch of input node " +
                     std::to_string(request.origin.value) + " can host " + app.name);
  }
  std::sort(devices.begin(), devices.end());

  std::vector<Term> time_terms, price_terms;
  for (DeviceId id : devices) {
    const Device& d = topology.device(id);
    const Variant& v = *app.variant(d.kind);
    time_terms.push_back({v.processing_time, dvar(id)});
    price_terms.push_back({d.full_month_cost * v.resource_demand / d.capacity, dvar(id)});
  }
  for (const auto& [l, _] : users_of_link) {
    const Link& lk = topology.link(l);
    time_terms.push_back({transfer_time(app.data_size, app.bandwidth_demand), lvar(l)});
    price_terms.push_back({lk.month_cost * app.bandwidth_demand / lk.bandwidth_limit, lvar(l)});
  }

  std::ostringstream os;
  os << "\\ request " << request.id << " app " << app.name << " origin "
     << request.origin.value << " " << kind_name(req) << " cap " << num(limit_of(req))
     << "\n";
  os << "Minimize\n obj:";
  write_terms(os, cost_mode ? time_terms : price_terms);
  os << "\nSubject To\n one_device:";
  std::vector<Term> ones;
  for (DeviceId id : devices) ones.push_back({1.0, dvar(id)});
  write_terms(os, ones);
  os << " = 1\n";
  for (const auto& [l, users] : users_of_link) {
    std::vector<Term> row{{1.0, lvar(l)}};
    for (DeviceId id : users) row.push_back({-1.0, dvar(id)});
    os << " path_" << lvar(l) << ':';
    write_terms(os, row);
    os << " = 0\n";
  }
  for (DeviceId id : devices) {
    const Device& d = topology.device(id);
    os << " room_" << dvar(id) << ": " << num(app.variant(d.kind)->resource_demand) << ' '
       << dvar(id) << " <= " << num(d.capacity - d.used) << "\n";
  }
  for (const auto& [l, _] : users_of_link) {
    const Link& lk = topology.link(l);
    os << " room_" << lvar(l) << ": " << num(app.bandwidth_demand) << ' ' << lvar(l)
       << " <= " << num(lk.bandwidth_limit - lk.used) << "\n";
  }
  os << " requirement:";
  write_terms(os, cost_mode ? price_terms : time_terms);
  os << " <= " << num(limit_of(req)) << "\n";
  os << "Binary\n";
  for (DeviceId id : devices) os << ' ' << dvar(id) << "\n";
  for (const auto& [l, _] : users_of_link) os << ' ' << lvar(l) << "\n";
  os << "End\n";
  return os.str();
}

}  // namespace edgeplace
