#include "bizgame/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "bizgame/csv.hpp"
#include "bizgame/match.hpp"

namespace bizgame {

namespace fs = std::filesystem;

namespace {

constexpr const char* kStatColumns[9] = {
    "very_coop_pct", "coop_pct",     "good_pct",     "okay_pct",          "dishonest_pct",
    "very_dishonest_pct", "mean_theta", "mean_fitness", "coop_move_fraction"};

std::string StatsHeader() {
  std::string header = "generation";
  for (const char* col : kStatColumns) {
    header += ',';
    header += col;
  }
  return header;
}

std::array<double, 9> Columns(const GenerationStats& stats) {
  return {stats.class_shares[0], stats.class_shares[1], stats.class_shares[2],
          stats.class_shares[3], stats.class_shares[4], stats.class_shares[5],
          stats.mean_theta,      stats.mean_fitness,    stats.coop_move_fraction};
}

GenerationStats FromColumns(std::uint32_t generation, const std::array<double, 9>& cols) {
  GenerationStats stats;
  stats.generation = generation;
  for (int i = 0; i < 6; ++i) { stats.class_shares[i] = cols[i]; }
  stats.mean_theta = cols[6];
  stats.mean_fitness = cols[7];
  stats.coop_move_fraction = cols[8];
  return stats;
}

// Stats as an external CSV reader would see them; aggregates are computed
// over these so the emitted files are mutually consistent.
GenerationStats RoundStats(const GenerationStats& stats) {
  std::array<double, 9> cols = Columns(stats);
  for (double& v : cols) { v = RoundToSerialized(v); }
  return FromColumns(stats.generation, cols);
}

std::string StatsRow(const GenerationStats& stats) {
  std::string row = std::to_string(stats.generation);
  for (double v : Columns(stats)) {
    row += ',';
    row += FormatFixed6(v);
  }
  return row;
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) { throw std::runtime_error("cannot open output file: " + path.string()); }
  out << content;
  out.flush();
  if (!out) { throw std::runtime_error("failed writing output file: " + path.string()); }
}

unsigned ResolveThreads(unsigned requested) {
  if (requested != 0) { return requested; }
  if (const char* env = std::getenv("BIZGAME_THREADS")) {
    const unsigned long parsed = std::strtoul(env, nullptr, 10);
    if (parsed >= 1) { return static_cast<unsigned>(parsed); }
  }
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware ? hardware : 1;
}

void ValidateConfig(const ExperimentConfig& config) {
  Require(config.grid_width >= 3 && config.grid_height >= 3, "grid must be at least 3x3");
  Require(config.generations >= 1, "generations must be at least 1");
  Require(config.rounds_per_match >= 1, "rounds_per_match must be at least 1");
  Require(config.replicates >= 1, "replicates must be at least 1");
  Require(config.goods_value > 0.0, "goods_value must be positive");
  Require(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0,
          "mutation_rate outside [0,1]");
  Require(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0,
          "crossover_rate outside [0,1]");
  std::uint32_t previous = 0;
  for (std::uint32_t g : config.snapshot_generations) {
    Require(g >= 1 && g <= config.generations, "snapshot generation outside [1,generations]");
    Require(g > previous, "snapshot generations must be strictly ascending");
    previous = g;
  }
}

struct ReplicateOutput {
  std::vector<GenerationStats> stats;  // rounded, [generation-1]
  std::vector<std::pair<std::uint32_t, std::string>> grid_dumps;
};

ReplicateOutput RunOneReplicate(const ExperimentConfig& config, Scheme scheme,
                                std::uint32_t replicate) {
  Rng rng(config.base_seed + replicate);
  Grid grid = Grid::Random(config.grid_width, config.grid_height, rng);
  const PayoffParams payoff{scheme, config.goods_value};
  const GaParams ga{config.crossover_rate, config.mutation_rate, config.rounds_per_match};

  ReplicateOutput output;
  output.stats.reserve(config.generations);
  for (std::uint32_t gen = 1; gen <= config.generations; ++gen) {
    grid.EvaluateGeneration(payoff, ga);
    GenerationStats stats = grid.Stats();
    stats.generation = gen;
    output.stats.push_back(RoundStats(stats));
    if (replicate == 0 && std::binary_search(config.snapshot_generations.begin(),
                                             config.snapshot_generations.end(), gen)) {
      std::ostringstream dump;
      WriteGridCsv(grid, dump);
      output.grid_dumps.emplace_back(gen, dump.str());
    }
    if (gen < config.generations) { grid = grid.NextGeneration(ga, rng); }
  }
  return output;
}

// Replicates share nothing mutable, so any thread count yields the same
// outputs; results are assembled by replicate index.
std::vector<ReplicateOutput> RunReplicates(const ExperimentConfig& config, Scheme scheme,
                                           unsigned threads) {
  std::vector<ReplicateOutput> results(config.replicates);
  const unsigned workers =
      std::min<unsigned>(std::max(1u, threads), config.replicates);

  if (workers == 1) {
    for (std::uint32_t r = 0; r < config.replicates; ++r) {
      results[r] = RunOneReplicate(config, scheme, r);
    }
    return results;
  }

  std::atomic<std::uint32_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&]() {
    try {
      while (true) {
        const std::uint32_t r = next.fetch_add(1);
        if (r >= config.replicates) { return; }
        results[r] = RunOneReplicate(config, scheme, r);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) { first_error = std::current_exception(); }
    }
  };
  {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) { pool.emplace_back(work); }
    for (std::thread& t : pool) { t.join(); }
  }
  if (first_error) { std::rethrow_exception(first_error); }
  return results;
}

}  // namespace

SchemeRunResult RunScheme(const ExperimentConfig& config, Scheme scheme,
                          const RunOptions& options) {
  ValidateConfig(config);
  const std::vector<ReplicateOutput> replicates =
      RunReplicates(config, scheme, ResolveThreads(options.threads));

  SchemeRunResult result;
  result.scheme = scheme;
  for (const ReplicateOutput& rep : replicates) { result.replicate_stats.push_back(rep.stats); }

  // Cross-replicate mean and sample standard deviation, per generation and
  // column, over the serialized replicate values.
  const std::uint32_t reps = config.replicates;
  std::vector<GenerationStats> sd_stats;
  result.mean_stats.reserve(config.generations);
  sd_stats.reserve(config.generations);
  for (std::uint32_t g = 0; g < config.generations; ++g) {
    std::array<double, 9> means{}, sds{};
    for (int col = 0; col < 9; ++col) {
      double sum = 0.0;
      for (std::uint32_t r = 0; r < reps; ++r) { sum += Columns(replicates[r].stats[g])[col]; }
      const double mean = sum / reps;
      double devsq = 0.0;
      for (std::uint32_t r = 0; r < reps; ++r) {
        const double d = Columns(replicates[r].stats[g])[col] - mean;
        devsq += d * d;
      }
      means[col] = RoundToSerialized(mean);
      sds[col] = reps > 1 ? RoundToSerialized(std::sqrt(devsq / (reps - 1))) : 0.0;
    }
    result.mean_stats.push_back(FromColumns(g + 1, means));
    sd_stats.push_back(FromColumns(g + 1, sds));
  }

  const GenerationStats& final_mean = result.mean_stats.back();
  result.final_mean_theta = final_mean.mean_theta;
  result.final_mean_theta_sd = sd_stats.back().mean_theta;
  result.final_class_shares = final_mean.class_shares;

  // Emit artifacts, single-threaded, in a fixed order.
  const fs::path scheme_dir = fs::path(config.output_dir) / SchemeName(scheme);
  std::error_code ec;
  fs::create_directories(scheme_dir / "grids", ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory: " +
                             (scheme_dir / "grids").string());
  }

  const std::string header = StatsHeader();
  for (std::uint32_t r = 0; r < reps; ++r) {
    char name[32];
    std::snprintf(name, sizeof name, "replicate_%03u.csv", r);
    std::string body = header + '\n';
    for (const GenerationStats& stats : replicates[r].stats) {
      body += StatsRow(stats);
      body += '\n';
    }
    const fs::path path = scheme_dir / name;
    WriteFile(path, body);
    result.files.push_back(path);
  }

  {
    std::string body = "generation";
    for (const char* col : kStatColumns) {
      body += ',';
      body += col;
      body += "_mean,";
      body += col;
      body += "_sd";
    }
    body += '\n';
    for (std::uint32_t g = 0; g < config.generations; ++g) {
      body += std::to_string(g + 1);
      const std::array<double, 9> means = Columns(result.mean_stats[g]);
      const std::array<double, 9> sds = Columns(sd_stats[g]);
      for (int col = 0; col < 9; ++col) {
        body += ',';
        body += FormatFixed6(means[col]);
        body += ',';
        body += FormatFixed6(sds[col]);
      }
      body += '\n';
    }
    const fs::path path = scheme_dir / "stats_mean.csv";
    WriteFile(path, body);
    result.files.push_back(path);
  }

  {
    std::string body = "replicate," + header + '\n';
    for (std::uint32_t snap : config.snapshot_generations) {
      for (std::uint32_t r = 0; r < reps; ++r) {
        body += std::to_string(r);
        body += ',';
        body += StatsRow(replicates[r].stats[snap - 1]);
        body += '\n';
      }
      body += "mean,";
      body += StatsRow(result.mean_stats[snap - 1]);
      body += '\n';
    }
    const fs::path path = scheme_dir / "snapshots.csv";
    WriteFile(path, body);
    result.files.push_back(path);
  }

  {
    double coop_share = 0.0;
    for (const PlayerClass c : {PlayerClass::VeryCooperative, PlayerClass::Cooperative,
                                PlayerClass::Good, PlayerClass::Okay}) {
      coop_share += result.final_class_shares[static_cast<std::size_t>(c)];
    }
    std::string body =
        "scheme,generations,replicates,final_mean_theta,final_mean_theta_sd,"
        "final_coop_class_share_pct\n";
    body += SchemeName(scheme);
    body += ',' + std::to_string(config.generations);
    body += ',' + std::to_string(reps);
    body += ',' + FormatFixed6(result.final_mean_theta);
    body += ',' + FormatFixed6(result.final_mean_theta_sd);
    body += ',' + FormatFixed6(coop_share);
    body += '\n';
    const fs::path path = scheme_dir / "summary.csv";
    WriteFile(path, body);
    result.files.push_back(path);
  }

  for (const auto& [gen, dump] : replicates[0].grid_dumps) {
    char name[32];
    std::snprintf(name, sizeof name, "rep000_gen%06u.csv", gen);
    const fs::path path = scheme_dir / "grids" / name;
    WriteFile(path, dump);
    result.files.push_back(path);
  }

  return result;
}

RunArtifacts RunExperiment(const ExperimentConfig& config, const RunOptions& options) {
  RunArtifacts artifacts;
  if (config.scheme == SchemeChoice::NonIncentive || config.scheme == SchemeChoice::Both) {
    artifacts.schemes.push_back(RunScheme(config, Scheme::NonIncentive, options));
  }
  if (config.scheme == SchemeChoice::ProIncentive || config.scheme == SchemeChoice::Both) {
    artifacts.schemes.push_back(RunScheme(config, Scheme::ProIncentive, options));
  }
  for (const SchemeRunResult& scheme : artifacts.schemes) {
    artifacts.files.insert(artifacts.files.end(), scheme.files.begin(), scheme.files.end());
  }
  return artifacts;
}

ComparisonResult CompareSchemes(const ExperimentConfig& config, const RunOptions& options) {
  // Identical config, and replicate r always seeds from base_seed + r, so the
  // two schemes start from the same populations.
  ComparisonResult result;
  result.non_incentive = RunScheme(config, Scheme::NonIncentive, options);
  result.pro_incentive = RunScheme(config, Scheme::ProIncentive, options);

  std::string body = "generation";
  for (const Scheme scheme : {Scheme::NonIncentive, Scheme::ProIncentive}) {
    for (int col = 0; col < 6; ++col) {
      body += ',';
      body += SchemeName(scheme);
      body += '_';
      body += kStatColumns[col];
    }
    body += ',';
    body += SchemeName(scheme);
    body += "_mean_theta";
  }
  body += '\n';
  for (std::uint32_t g = 0; g < config.generations; ++g) {
    body += std::to_string(g + 1);
    for (const SchemeRunResult* run : {&result.non_incentive, &result.pro_incentive}) {
      const GenerationStats& stats = run->mean_stats[g];
      for (double share : stats.class_shares) {
        body += ',';
        body += FormatFixed6(share);
      }
      body += ',';
      body += FormatFixed6(stats.mean_theta);
    }
    body += '\n';
  }
  result.comparison_csv = fs::path(config.output_dir) / "comparison.csv";
  WriteFile(result.comparison_csv, body);

  result.files = result.non_incentive.files;
  result.files.insert(result.files.end(), result.pro_incentive.files.begin(),
                      result.pro_incentive.files.end());
  result.files.push_back(result.comparison_csv);
  return result;
}

}  // namespace bizgame
