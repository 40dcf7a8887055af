#ifndef BIZGAME_RUNNER_HPP
#define BIZGAME_RUNNER_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "bizgame/config.hpp"
#include "bizgame/grid.hpp"
#include "bizgame/payoff.hpp"

namespace bizgame {

struct RunOptions {
  // Worker threads for replicate/scheme tasks. 0 = BIZGAME_THREADS env var,
  // falling back to the hardware count. Artifacts are identical for any
  // thread count; tasks never share mutable state.
  unsigned threads = 0;
};

// One scheme run over all replicates, plus the aggregates the caller most
// often wants. All stats are post-serialization values (rounded to the 6
// decimals the CSVs carry) so files and in-memory results always agree.
struct SchemeRunResult {
  Scheme scheme = Scheme::NonIncentive;
  std::vector<std::vector<GenerationStats>> replicate_stats;  // [replicate][generation-1]
  std::vector<GenerationStats> mean_stats;                    // across replicates
  double final_mean_theta = 0.0;     // final generation, averaged over replicates
  double final_mean_theta_sd = 0.0;  // sample stddev (0 when replicates == 1)
  std::array<double, kPlayerClassCount> final_class_shares{};  // averaged over replicates
  std::vector<std::filesystem::path> files;
};

struct RunArtifacts {
  std::vector<SchemeRunResult> schemes;
  std::vector<std::filesystem::path> files;
};

struct ComparisonResult {
  SchemeRunResult non_incentive;
  SchemeRunResult pro_incentive;
  std::filesystem::path comparison_csv;
  std::vector<std::filesystem::path> files;
};

// Runs one scheme: replicate r uses seed base_seed + r, a fresh random grid
// and empty ledgers, then <generations> rounds of evaluate / record stats /
// replace. Emits under <output_dir>/<scheme>/:
//   replicate_NNN.csv   per-generation stats, one file per replicate
//   stats_mean.csv      cross-replicate mean and sample stddev per generation
//   snapshots.csv       stats at the snapshot generations, per replicate and
//                       replicate-averaged
//   summary.csv         final-generation reputation and cooperative-class
//                       share, averaged over replicates
//   grids/              full per-player dumps at snapshot generations
//                       (replicate 0)
SchemeRunResult RunScheme(const ExperimentConfig& config, Scheme scheme,
                          const RunOptions& options = {});

// Runs the scheme(s) selected by config.scheme.
RunArtifacts RunExperiment(const ExperimentConfig& config, const RunOptions& options = {});

// Runs both schemes from identical seeds (so initial populations match) and
// joins their per-generation class shares and mean reputation into
// <output_dir>/comparison.csv.
ComparisonResult CompareSchemes(const ExperimentConfig& config,
                                const RunOptions& options = {});

}  // namespace bizgame

#endif  // BIZGAME_RUNNER_HPP
