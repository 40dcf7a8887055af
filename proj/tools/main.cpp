#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bizgame/config.hpp"
#include "bizgame/csv.hpp"
#include "bizgame/match.hpp"
#include "bizgame/runner.hpp"

namespace {

using namespace bizgame;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct CommonFlags {
  std::string config_path;
  std::string scheme;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_dir;
  unsigned threads = 0;
};

ExperimentConfig LoadWithOverrides(const CommonFlags& flags) {
  ExperimentConfig config = LoadConfigFile(flags.config_path);
  if (!flags.scheme.empty()) {
    if (flags.scheme == "non_incentive") {
      config.scheme = SchemeChoice::NonIncentive;
    } else if (flags.scheme == "pro_incentive") {
      config.scheme = SchemeChoice::ProIncentive;
    } else {
      throw ValidationError("--scheme must be non_incentive or pro_incentive");
    }
  }
  if (flags.seed_set) { config.base_seed = flags.seed; }
  if (!flags.out_dir.empty()) { config.output_dir = flags.out_dir; }
  return config;
}

void PrintFiles(const std::vector<std::filesystem::path>& files) {
  for (const auto& file : files) { std::cout << file.generic_string() << '\n'; }
}

int RunCommand(const CommonFlags& flags) {
  const ExperimentConfig config = LoadWithOverrides(flags);
  RunOptions options;
  options.threads = flags.threads;
  const RunArtifacts artifacts = RunExperiment(config, options);
  PrintFiles(artifacts.files);
  for (const SchemeRunResult& scheme : artifacts.schemes) {
    std::cerr << SchemeName(scheme.scheme) << ": final mean theta "
              << FormatFixed6(scheme.final_mean_theta) << " (sd "
              << FormatFixed6(scheme.final_mean_theta_sd) << ")\n";
  }
  return kExitOk;
}

int CompareCommand(const CommonFlags& flags) {
  const ExperimentConfig config = LoadWithOverrides(flags);
  RunOptions options;
  options.threads = flags.threads;
  const ComparisonResult result = CompareSchemes(config, options);
  PrintFiles(result.files);
  std::cerr << "final mean theta: pro_incentive "
            << FormatFixed6(result.pro_incentive.final_mean_theta) << " vs non_incentive "
            << FormatFixed6(result.non_incentive.final_mean_theta) << '\n';
  return kExitOk;
}

struct InspectFlags {
  std::string genome;
  std::string opponent;
  std::uint32_t rounds = 10;
  std::string scheme = "pro_incentive";
  double goods_value = 1.0;
};

int InspectCommand(const InspectFlags& flags) {
  const Chromosome genome = Chromosome::FromString(flags.genome);

  std::cout << "genome            " << genome.ToString() << '\n';
  std::cout << "round 1           " << MoveChar(genome.At(64)) << '\n';
  std::cout << "round 2 (opp C/D) " << MoveChar(genome.At(65)) << MoveChar(genome.At(66))
            << '\n';
  std::cout << "round 3 (CC/CD/DC/DD) " << MoveChar(genome.At(67)) << MoveChar(genome.At(68))
            << MoveChar(genome.At(69)) << MoveChar(genome.At(70)) << '\n';
  const double coop_pct = genome.CooperationFraction() * 100.0;
  std::cout << "cooperation       " << FormatFixed6(coop_pct) << "%\n";
  std::cout << "class             " << PlayerClassName(ClassifyCooperation(coop_pct)) << '\n';

  if (!flags.opponent.empty()) {
    const Chromosome opponent = Chromosome::FromString(flags.opponent);
    Scheme scheme;
    if (flags.scheme == "non_incentive") {
      scheme = Scheme::NonIncentive;
    } else if (flags.scheme == "pro_incentive") {
      scheme = Scheme::ProIncentive;
    } else {
      throw ValidationError("--scheme must be non_incentive or pro_incentive");
    }
    if (!(flags.goods_value > 0.0)) { throw ValidationError("--goods-value must be positive"); }
    if (flags.rounds < 1) { throw ValidationError("--rounds must be at least 1"); }

    std::cout << "\nround  a  b  theta_a  theta_b  payoff_a  payoff_b\n";
    TransactionHistory ledger_a, ledger_b;
    const MatchResult match = PlayMatch(
        genome, opponent, ledger_a, ledger_b, flags.rounds, {scheme, flags.goods_value},
        [](const RoundTrace& t) {
          std::printf("%5u  %c  %c  %7.4f  %7.4f  %8.3f  %8.3f\n", t.round, MoveChar(t.move_a),
                      MoveChar(t.move_b), t.theta_a, t.theta_b, t.payoff_a, t.payoff_b);
        });
    std::cout << "totals " << FormatFixed6(match.total_a) << " vs "
              << FormatFixed6(match.total_b) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolution of cooperation in an online-business game"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run the configured experiment");
  run->add_option("--config", run_flags.config_path, "Config file (key = value lines)")
      ->required();
  run->add_option("--scheme", run_flags.scheme,
                  "Override the scheme: non_incentive or pro_incentive");
  run->add_option("--seed", run_flags.seed, "Override base_seed")
      ->each([&run_flags](const std::string&) { run_flags.seed_set = true; });
  run->add_option("--out", run_flags.out_dir, "Override output_dir");
  run->add_option("--threads", run_flags.threads, "Worker threads (default: all cores)");

  CommonFlags compare_flags;
  CLI::App* compare =
      app.add_subcommand("compare", "Run both schemes from identical seeds and join the stats");
  compare->add_option("--config", compare_flags.config_path, "Config file (key = value lines)")
      ->required();
  compare->add_option("--seed", compare_flags.seed, "Override base_seed")
      ->each([&compare_flags](const std::string&) { compare_flags.seed_set = true; });
  compare->add_option("--out", compare_flags.out_dir, "Override output_dir");
  compare->add_option("--threads", compare_flags.threads,
                      "Worker threads (default: all cores)");

  InspectFlags inspect_flags;
  CLI::App* inspect = app.add_subcommand("inspect", "Decode a genome string");
  inspect->add_option("--genome", inspect_flags.genome, "71-character bit string")->required();
  inspect->add_option("--vs", inspect_flags.opponent,
                      "Opponent genome: also trace a match against it");
  inspect->add_option("--rounds", inspect_flags.rounds, "Trace match length (default 10)");
  inspect->add_option("--scheme", inspect_flags.scheme,
                      "Trace scheme (default pro_incentive)");
  inspect->add_option("--goods-value", inspect_flags.goods_value,
                      "Trace goods value (default 1)");

  try {
    app.parse(argc, argv);
    if (run->parsed()) { return RunCommand(run_flags); }
    if (compare->parsed()) { return CompareCommand(compare_flags); }
    return InspectCommand(inspect_flags);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const bizgame::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
