#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "edgeplace/appmodel.hpp"
#include "edgeplace/error.hpp"
#include "edgeplace/placement.hpp"
#include "edgeplace/scenario.hpp"
#include "edgeplace/simulator.hpp"
#include "edgeplace/topology.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace edgeplace;

namespace {

template <typename T>
void bind_id(py::module_& m, const char* name) {
  py::class_<T>(m, name)
      .def(py::init<std::size_t>())
      .def_readonly("value", &T::value)
      .def("__int__", [](T id) { return id.value; })
      .def("__index__", [](T id) { return id.value; })
      .def("__eq__", [](T a, T b) { return a == b; })
      .def("__hash__", [](T id) { return std::hash<T>{}(id); })
      .def("__repr__", [name](T id) {
        return std::string(name) + "(" + std::to_string(id.value) + ")";
      });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge/cloud application placement core";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UnreachableSite>(m, "UnreachableSite", error.ptr());
  py::register_exception<CapacityViolation>(m, "CapacityViolation", error.ptr());
  py::register_exception<IneligibleDevice>(m, "IneligibleDevice", error.ptr());
  py::register_exception<EmptyModel>(m, "EmptyModel", error.ptr());
  py::register_exception<ScenarioError>(m, "ScenarioError", error.ptr());

  py::enum_<Tier>(m, "Tier")
      .value("Cloud", Tier::Cloud)
      .value("CarrierEdge", Tier::CarrierEdge)
      .value("UserEdge", Tier::UserEdge);
  py::enum_<DeviceKind>(m, "DeviceKind")
      .value("CPU", DeviceKind::CPU)
      .value("GPU", DeviceKind::GPU)
      .value("FPGA", DeviceKind::FPGA);
  py::enum_<RequestPattern>(m, "RequestPattern")
      .value("P1", RequestPattern::P1)
      .value("P2", RequestPattern::P2)
      .value("P3", RequestPattern::P3);

  bind_id<SiteId>(m, "SiteId");
  bind_id<DeviceId>(m, "DeviceId");
  bind_id<LinkId>(m, "LinkId");
  bind_id<InputNodeId>(m, "InputNodeId");

  py::class_<Device>(m, "Device")
      .def_readonly("id", &Device::id)
      .def_readonly("site", &Device::site)
      .def_readonly("kind", &Device::kind)
      .def_readonly("capacity", &Device::capacity)
      .def_readonly("full_month_cost", &Device::full_month_cost)
      .def_readonly("used", &Device::used)
      .def_property_readonly("unit_cost", &Device::unit_cost);

  py::class_<Link>(m, "Link")
      .def_readonly("id", &Link::id)
      .def_readonly("child", &Link::child)
      .def_readonly("parent", &Link::parent)
      .def_readonly("bandwidth_limit", &Link::bandwidth_limit)
      .def_readonly("month_cost", &Link::month_cost)
      .def_readonly("used", &Link::used);

  py::class_<Site>(m, "Site")
      .def_readonly("id", &Site::id)
      .def_readonly("tier", &Site::tier)
      .def_readonly("parent_link", &Site::parent_link)
      .def_readonly("devices", &Site::devices);

  py::class_<Topology>(m, "Topology")
      .def(py::init<>())
      .def("add_cloud_site", &Topology::add_cloud_site)
      .def("add_child_site", &Topology::add_child_site, py::arg("parent"),
           py::arg("bandwidth_limit"), py::arg("month_cost"))
      .def("add_device", &Topology::add_device, py::arg("site"), py::arg("kind"),
           py::arg("capacity"), py::arg("full_month_cost"))
      .def("add_input_node", &Topology::add_input_node)
      .def_property_readonly("sites", &Topology::sites)
      .def_property_readonly("devices", &Topology::devices)
      .def_property_readonly("links", &Topology::links)
      .def_property_readonly("input_node_count", &Topology::input_node_count)
      .def("home_site", &Topology::home_site)
      .def("branch", &Topology::branch)
      .def("path", &Topology::path, py::arg("origin"), py::arg("target"))
      .def(
          "commit",
          [](Topology& t, DeviceId d, double demand, const std::vector<LinkId>& links,
             double bw) { t.commit(d, demand, links, bw); },
          py::arg("device"), py::arg("resource_demand"), py::arg("links"),
          py::arg("bandwidth_demand"))
      .def("reset_ledger", &Topology::reset_ledger)
      .def("ledger_safe", &Topology::ledger_safe)
      .def("copy", [](const Topology& t) { return Topology(t); });

  py::class_<Variant>(m, "Variant")
      .def(py::init<double, double>(), py::arg("processing_time"), py::arg("resource_demand"))
      .def_readwrite("processing_time", &Variant::processing_time)
      .def_readwrite("resource_demand", &Variant::resource_demand);

  py::class_<AppProfile>(m, "AppProfile")
      .def(py::init<>())
      .def_readwrite("name", &AppProfile::name)
      .def_readwrite("variants", &AppProfile::variants)
      .def_readwrite("bandwidth_demand", &AppProfile::bandwidth_demand)
      .def_readwrite("data_size", &AppProfile::data_size);

  py::class_<CostCap>(m, "CostCap")
      .def(py::init<double>(), py::arg("limit"))
      .def_readwrite("limit", &CostCap::limit)
      .def("__repr__", [](const CostCap& c) { return "CostCap(" + std::to_string(c.limit) + ")"; });
  py::class_<ResponseCap>(m, "ResponseCap")
      .def(py::init<double>(), py::arg("limit"))
      .def_readwrite("limit", &ResponseCap::limit)
      .def("__repr__",
           [](const ResponseCap& c) { return "ResponseCap(" + std::to_string(c.limit) + ")"; });

  py::class_<PlacementRequest>(m, "PlacementRequest")
      .def(py::init<>())
      .def(py::init([](std::uint64_t id, AppProfile profile, std::size_t origin,
                       std::vector<Requirement> ladder) {
             return PlacementRequest{id, std::move(profile), InputNodeId{origin},
                                     std::move(ladder)};
           }),
           py::arg("id"), py::arg("profile"), py::arg("origin"), py::arg("ladder"))
      .def_readwrite("id", &PlacementRequest::id)
      .def_readwrite("profile", &PlacementRequest::profile)
      .def_readwrite("origin", &PlacementRequest::origin)
      .def_readwrite("ladder", &PlacementRequest::ladder);

  py::class_<Candidate>(m, "Candidate")
      .def_readonly("device", &Candidate::device)
      .def_readonly("tier", &Candidate::tier)
      .def_readonly("links", &Candidate::links)
      .def_readonly("price", &Candidate::price)
      .def_readonly("response_time", &Candidate::response_time);

  py::class_<Placed>(m, "Placed")
      .def_readonly("candidate", &Placed::candidate)
      .def_readonly("requirement_used", &Placed::requirement_used);
  py::class_<Rejected>(m, "Rejected").def_readonly("reason", &Rejected::reason);

  py::class_<StepRecord>(m, "StepRecord")
      .def_readonly("request_id", &StepRecord::request_id)
      .def_readonly("app", &StepRecord::app)
      .def_readonly("placed", &StepRecord::placed)
      .def_readonly("tier", &StepRecord::tier)
      .def_readonly("requirement_used", &StepRecord::requirement_used)
      .def_readonly("price", &StepRecord::price)
      .def_readonly("response_time", &StepRecord::response_time);

  py::class_<SimulationResult>(m, "SimulationResult")
      .def_readonly("records", &SimulationResult::records)
      .def_readonly("running_avg_price", &SimulationResult::running_avg_price)
      .def_readonly("running_avg_response", &SimulationResult::running_avg_response)
      .def_readonly("rejection_count", &SimulationResult::rejection_count)
      .def_property_readonly("placed_count", &SimulationResult::placed_count)
      .def("steps_csv", [](const SimulationResult& r) { return steps_csv(r); })
      .def("curves_csv", [](const SimulationResult& r) { return curves_csv(r); });

  m.def("build_default_scenario", &build_default_scenario);
  m.def(
      "load_scenario_topology",
      [](const std::filesystem::path& p) { return build_topology(load_scenario(p)); },
      py::arg("path"));
  m.def("default_scenario_json", [] { return to_json(default_scenario_config()); });
  m.def("default_profiles", &default_profiles);

  m.def(
      "generate_requests",
      [](RequestPattern pattern, std::int64_t n, std::uint64_t seed, const Topology& t) {
        return generate_requests(pattern, n, seed, t);
      },
      py::arg("pattern"), py::arg("n"), py::arg("seed"), py::arg("topology"));

  m.def(
      "response_time",
      [](const AppProfile& app, const Topology& t, DeviceId d, const std::vector<LinkId>& ids) {
        std::vector<Link> links;
        for (LinkId id : ids) links.push_back(t.link(id));
        return response_time(app, t.device(d), links);
      },
      py::arg("profile"), py::arg("topology"), py::arg("device"), py::arg("links"));
  m.def(
      "price",
      [](const AppProfile& app, const Topology& t, DeviceId d, const std::vector<LinkId>& ids) {
        std::vector<Link> links;
        for (LinkId id : ids) links.push_back(t.link(id));
        return price(app, t.device(d), links);
      },
      py::arg("profile"), py::arg("topology"), py::arg("device"), py::arg("links"));

  m.def("enumerate_candidates", &enumerate_candidates, py::arg("request"), py::arg("topology"));
  m.def("decide", &decide, py::arg("request"), py::arg("topology"));
  m.def("solve", &solve, py::arg("request"), py::arg("topology"));
  m.def("export_lp", &export_lp, py::arg("request"), py::arg("topology"), py::arg("rung") = 0);

  m.def(
      "run",
      [](Topology& t, const std::vector<PlacementRequest>& requests) { return run(t, requests); },
      py::arg("topology"), py::arg("requests"));
  m.def("write_csv", &write_csv, py::arg("result"), py::arg("dir"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
