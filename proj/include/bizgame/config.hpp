#ifndef BIZGAME_CONFIG_HPP
#define BIZGAME_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bizgame/errors.hpp"
#include "bizgame/payoff.hpp"

namespace bizgame {

enum class SchemeChoice { NonIncentive, ProIncentive, Both };

struct ExperimentConfig {
  std::uint32_t grid_width = 50;
  std::uint32_t grid_height = 50;
  std::uint32_t generations = 5000;
  std::uint32_t rounds_per_match = 100;
  SchemeChoice scheme = SchemeChoice::Both;
  double goods_value = 1.0;
  double mutation_rate = 0.001;
  double crossover_rate = 0.5;
  std::uint32_t replicates = 10;
  std::uint64_t base_seed = 1;
  std::vector<std::uint32_t> snapshot_generations;  // ascending, within [1, generations]
  std::string output_dir = "out";
};

// Snapshot generations used when the config does not name any: the standard
// series {1,100,500,1000,...,5000} clipped to [1, generations].
std::vector<std::uint32_t> DefaultSnapshotGenerations(std::uint32_t generations);

// Parses a `key = value` document ('#' starts a comment). Unknown keys,
// duplicate keys, malformed lines and out-of-range values raise a
// ValidationError naming the line. Missing keys take the defaults above.
ExperimentConfig ParseConfig(std::string_view text);

ExperimentConfig LoadConfigFile(const std::filesystem::path& path);

}  // namespace bizgame

#endif  // BIZGAME_CONFIG_HPP
