#include "bizgame/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace bizgame {

std::vector<std::uint32_t> DefaultSnapshotGenerations(std::uint32_t generations) {
  Require(generations >= 1, "generations must be positive");
  static const std::uint32_t series[] = {1,    100,  500,  1000, 1500, 2000,
                                         2500, 3000, 3500, 4000, 4500, 5000};
  std::vector<std::uint32_t> snapshots;
  for (std::uint32_t g : series) {
    if (g <= generations) { snapshots.push_back(g); }
  }
  return snapshots;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw ValidationError("config line " + std::to_string(line) + ": " + message);
}

template <typename T>
T ParseInteger(std::string_view value, int line, const std::string& key) {
  T parsed{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, parsed);
  if (ec == std::errc::result_out_of_range) { Fail(line, key + " is out of range"); }
  if (ec != std::errc() || ptr != end) {
    Fail(line, key + " must be a non-negative integer, got '" + std::string(value) + "'");
  }
  return parsed;
}

double ParseReal(std::string_view value, int line, const std::string& key) {
  double parsed = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, parsed);
  if (ec != std::errc() || ptr != end) {
    Fail(line, key + " must be a number, got '" + std::string(value) + "'");
  }
  return parsed;
}

std::vector<std::uint32_t> ParseSnapshotList(std::string_view value, int line) {
  std::vector<std::uint32_t> snapshots;
  std::string item;
  std::stringstream ss{std::string(value)};
  while (std::getline(ss, item, ',')) {
    const std::string_view trimmed = Trim(item);
    if (trimmed.empty()) { Fail(line, "snapshot_generations has an empty entry"); }
    snapshots.push_back(ParseInteger<std::uint32_t>(trimmed, line, "snapshot_generations"));
  }
  if (snapshots.empty()) { Fail(line, "snapshot_generations must name at least one generation"); }
  return snapshots;
}

}  // namespace

ExperimentConfig ParseConfig(std::string_view text) {
  ExperimentConfig config;
  std::set<std::string> seen;
  bool snapshots_given = false;
  int snapshots_line = 0;

  int line_number = 0;
  std::string line;
  std::stringstream lines{std::string(text)};
  while (std::getline(lines, line)) {
    ++line_number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) { continue; }

    const auto equals = view.find('=');
    if (equals == std::string_view::npos) { Fail(line_number, "expected 'key = value'"); }
    const std::string key{Trim(view.substr(0, equals))};
    const std::string_view value = Trim(view.substr(equals + 1));
    if (key.empty()) { Fail(line_number, "missing key before '='"); }
    if (value.empty()) { Fail(line_number, "missing value for '" + key + "'"); }
    if (!seen.insert(key).second) { Fail(line_number, "duplicate key '" + key + "'"); }

    if (key == "grid_width" || key == "grid_height") {
      const auto parsed = ParseInteger<std::uint32_t>(value, line_number, key);
      if (parsed < 3) { Fail(line_number, key + " must be at least 3"); }
      (key == "grid_width" ? config.grid_width : config.grid_height) = parsed;
    } else if (key == "generations") {
      config.generations = ParseInteger<std::uint32_t>(value, line_number, key);
      if (config.generations < 1) { Fail(line_number, "generations must be at least 1"); }
    } else if (key == "rounds_per_match") {
      config.rounds_per_match = ParseInteger<std::uint32_t>(value, line_number, key);
      if (config.rounds_per_match < 1) {
        Fail(line_number, "rounds_per_match must be at least 1");
      }
    } else if (key == "replicates") {
      config.replicates = ParseInteger<std::uint32_t>(value, line_number, key);
      if (config.replicates < 1) { Fail(line_number, "replicates must be at least 1"); }
    } else if (key == "scheme") {
      if (value == "non_incentive") {
        config.scheme = SchemeChoice::NonIncentive;
      } else if (value == "pro_incentive") {
        config.scheme = SchemeChoice::ProIncentive;
      } else if (value == "both") {
        config.scheme = SchemeChoice::Both;
      } else {
        Fail(line_number, "scheme must be non_incentive, pro_incentive or both");
      }
    } else if (key == "goods_value") {
      config.goods_value = ParseReal(value, line_number, key);
      if (!(config.goods_value > 0.0)) { Fail(line_number, "goods_value must be positive"); }
    } else if (key == "mutation_rate" || key == "crossover_rate") {
      const double parsed = ParseReal(value, line_number, key);
      if (!(parsed >= 0.0 && parsed <= 1.0)) {
        Fail(line_number, key + " must lie in [0,1]");
      }
      (key == "mutation_rate" ? config.mutation_rate : config.crossover_rate) = parsed;
    } else if (key == "base_seed") {
      config.base_seed = ParseInteger<std::uint64_t>(value, line_number, key);
    } else if (key == "snapshot_generations") {
      config.snapshot_generations = ParseSnapshotList(value, line_number);
      snapshots_given = true;
      snapshots_line = line_number;
    } else if (key == "output_dir") {
      config.output_dir = std::string(value);
    } else {
      Fail(line_number, "unknown key '" + key + "'");
    }
  }

  if (snapshots_given) {
    // generations may have been set on a later line, so range-check last.
    std::uint32_t previous = 0;
    for (std::uint32_t g : config.snapshot_generations) {
      if (g < 1 || g > config.generations) {
        Fail(snapshots_line, "snapshot_generations entries must lie in [1," +
                                 std::to_string(config.generations) + "]");
      }
      if (g <= previous) {
        Fail(snapshots_line, "snapshot_generations must be strictly ascending");
      }
      previous = g;
    }
  } else {
    config.snapshot_generations = DefaultSnapshotGenerations(config.generations);
  }
  return config;
}

ExperimentConfig LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    throw ValidationError("cannot open config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

}  // namespace bizgame
