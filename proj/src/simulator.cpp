#include "edgeplace/simulator.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edgeplace/error.hpp"

namespace edgeplace {

namespace {

constexpr std::string_view kStepsHeader =
    "request_id,app,outcome,tier,requirement_kind,requirement_limit,price_usd_month,"
    "response_s\n";
constexpr std::string_view kCurvesHeader = "placed_count,avg_price_usd_month,avg_response_s\n";

// Exact round-trip text, so steps.csv can be re-read without drift.
std::string exact(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string four_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void curve_row(std::string& out, std::size_t count, double avg_price, double avg_response) {
  out += std::to_string(count);
  out += ',';
  out += four_digits(avg_price);
  out += ',';
  out += four_digits(avg_response);
  out += '\n';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir.string() + ": " + ec.message());
}

}  // namespace

std::string_view version() { return "0.3.0"; }

SimulationResult run(Topology& topology, const std::vector<PlacementRequest>& requests,
                     RunMetadata metadata, const DecisionHook& on_decision) {
  SimulationResult result;
  result.metadata = std::move(metadata);
  result.records.reserve(requests.size());
  double price_sum = 0.0;
  double response_sum = 0.0;

  for (const PlacementRequest& req : requests) {
    PlacementDecision decision = decide(req, topology);
    if (on_decision) on_decision(req, topology, decision);
    if (const auto* placed = std::get_if<Placed>(&decision)) {
      commit(*placed, req.profile, topology);
    }
    if (!topology.ledger_safe()) {
      throw std::logic_error("ledger overcommitted after request " + std::to_string(req.id));
    }

    StepRecord rec;
    rec.request_id = req.id;
    rec.app = req.profile.name;
    if (auto* placed = std::get_if<Placed>(&decision)) {
      rec.placed = true;
      rec.tier = placed->candidate.tier;
      rec.requirement_used = placed->requirement_used;
      rec.price = placed->candidate.price;
      rec.response_time = placed->candidate.response_time;
      rec.device = placed->candidate.device;

      price_sum += placed->candidate.price;
      response_sum += placed->candidate.response_time;
      const auto m = static_cast<double>(result.running_avg_price.size() + 1);
      result.running_avg_price.push_back(price_sum / m);
      result.running_avg_response.push_back(response_sum / m);
    } else {
      ++result.rejection_count;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

std::string steps_csv(const SimulationResult& result) {
  std::string out(kStepsHeader);
  for (const StepRecord& r : result.records) {
    out += std::to_string(r.request_id);
    out += ',';
    out += r.app;
    if (r.placed) {
      out += ",placed,";
      out += to_string(*r.tier);
      out += ',';
      out += kind_name(*r.requirement_used);
      out += ',';
      out += exact(limit_of(*r.requirement_used));
      out += ',';
      out += exact(*r.price);
      out += ',';
      out += exact(*r.response_time);
    } else {
      out += ",rejected,,,,,";
    }
    out += '\n';
  }
  return out;
}

std::string curves_csv(const SimulationResult& result) {
  std::string out(kCurvesHeader);
  for (std::size_t i = 0; i < result.running_avg_price.size(); ++i) {
    curve_row(out, i + 1, result.running_avg_price[i], result.running_avg_response[i]);
  }
  return out;
}

std::string curves_from_steps(const std::string& steps) {
  std::istringstream in(steps);
  std::string line;
  std::getline(in, line);  // header
  std::string out(kCurvesHeader);
  double price_sum = 0.0;
  double response_sum = 0.0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 8) throw std::invalid_argument("malformed steps row: " + line);
    if (f[2] != "placed") continue;
    price_sum += parse_double(f[6]);
    response_sum += parse_double(f[7]);
    ++count;
    const auto m = static_cast<double>(count);
    curve_row(out, count, price_sum / m, response_sum / m);
  }
  return out;
}

void write_csv(const SimulationResult& result, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_file(dir / "steps.csv", steps_csv(result));
  write_file(dir / "curves.csv", curves_csv(result));
}

void write_metadata(const SimulationResult& result, const std::filesystem::path& dir) {
  ensure_dir(dir);
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

  std::ostringstream os;
  os << "software: edgeplace " << version() << "\n"
     << "seed: " << result.metadata.seed << "\n"
     << "pattern: " << result.metadata.pattern << "\n"
     << "scenario_hash: " << result.metadata.scenario_hash << "\n"
     << "rng: " << result.metadata.rng << "\n"
     << "requests: " << result.records.size() << "\n"
     << "placed: " << result.placed_count() << "\n"
     << "rejected: " << result.rejection_count << "\n"
     << "generated_at: " << stamp << "\n";
  write_file(dir / "meta.txt", os.str());
}

}  // namespace edgeplace
