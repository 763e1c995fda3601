#include "edgeplace/cli.hpp"

#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "edgeplace/error.hpp"
#include "edgeplace/placement.hpp"
#include "edgeplace/scenario.hpp"
#include "edgeplace/simulator.hpp"

namespace edgeplace {

void execute(const RunConfig& config, RequestPattern pattern, const std::filesystem::path& dir) {
  const ScenarioConfig scenario =
      config.scenario_path ? load_scenario(*config.scenario_path) : default_scenario_config();
  Topology topology = build_topology(scenario);
  const auto requests =
      generate_requests(pattern, config.request_count, config.seed, topology, scenario.apps);

  RunMetadata meta;
  meta.seed = config.seed;
  meta.pattern = std::string(to_string(pattern));
  meta.scenario_hash = scenario_hash(scenario);

  std::filesystem::create_directories(dir);
  DecisionHook hook;
  if (config.export_lp) {
    hook = [&dir](const PlacementRequest& req, const Topology& topo,
                  const PlacementDecision& decision) {
      // Model the rung that admitted the request, or the first one if none did.
      std::size_t rung = 0;
      if (const auto* placed = std::get_if<Placed>(&decision)) {
        for (std::size_t i = 0; i < req.ladder.size(); ++i) {
          if (req.ladder[i] == placed->requirement_used) rung = i;
        }
      }
      std::string text;
      try {
        text = export_lp(req, topo, rung);
      } catch (const EmptyModel&) {
        return;
      }
      const auto path = dir / lp_file_name(req);
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!(out << text)) throw Error("failed writing " + path.string());
    };
  }
  const SimulationResult result = run(topology, requests, meta, hook);
  write_csv(result, dir);
  write_metadata(result, dir);
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential edge/cloud application placement simulator", "edgeplace"};
  RunConfig config;
  std::string pattern = "p1";
  std::string scenario;
  std::string dump_path;

  app.add_option("--pattern", pattern, "Request pattern")
      ->check(CLI::IsMember({"p1", "p2", "p3"}))
      ->capture_default_str();
  app.add_option("--requests", config.request_count, "Number of placement requests")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--scenario", scenario, "Scenario JSON file (default: built-in)");
  app.add_option("--out", config.output_dir, "Output directory")->capture_default_str();
  app.add_flag("--export-lp", config.export_lp, "Write request_<id>.lp for every request");
  app.add_flag("--all-patterns", config.all_patterns,
               "Run p1, p2 and p3 with the same seed into subdirectories");
  app.add_option("--dump-scenario", dump_path,
                 "Write the built-in scenario as JSON to this file and exit");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (!dump_path.empty()) {
      std::ofstream f(dump_path, std::ios::binary | std::ios::trunc);
      if (!(f << to_json(default_scenario_config()))) {
        throw Error("cannot write " + dump_path);
      }
      return 0;
    }
    if (!scenario.empty()) config.scenario_path = scenario;
    config.pattern = *parse_pattern(pattern);

    if (config.all_patterns) {
      for (RequestPattern p : {RequestPattern::P1, RequestPattern::P2, RequestPattern::P3}) {
        const auto dir = config.output_dir / std::string(to_string(p));
        execute(config, p, dir);
        out << "wrote " << dir.string() << "\n";
      }
    } else {
      execute(config, config.pattern, config.output_dir);
      out << "wrote " << config.output_dir.string() << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace edgeplace
