#include "bizgame/grid.hpp"

#include <algorithm>
#include <ostream>

#include "bizgame/csv.hpp"

namespace bizgame {

namespace {

// Selection weights are fitness shifted to the neighbourhood minimum; the
// epsilon keeps a flat neighbourhood selectable.
constexpr double kRouletteEpsilon = 1e-9;

// Moore neighbourhood in fixed row-major order, self at position 4. The
// order is part of the deterministic rng-consumption contract.
constexpr int kNeighbourhood[9][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0},
                                      {0, 1},   {1, -1}, {1, 0},  {1, 1}};

// Match edges: East, South-West, South, South-East. Every adjacent pair
// appears exactly once when these are walked from every cell.
constexpr int kMatchEdges[4][2] = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};

}  // namespace

Grid::Grid(std::uint32_t width, std::uint32_t height) : width_(width), height_(height) {
  Require(width >= 3 && height >= 3, "grid must be at least 3x3");
  cells_.resize(static_cast<std::size_t>(width) * height);
}

Grid Grid::Random(std::uint32_t width, std::uint32_t height, Rng& rng) {
  Grid grid(width, height);
  for (PlayerState& cell : grid.cells_) { cell.genome = Chromosome::Random(rng); }
  return grid;
}

void Grid::EvaluateGeneration(const PayoffParams& payoff, const GaParams& ga) {
  Require(!evaluated_, "generation already evaluated");
  for (const PlayerState& cell : cells_) {
    Require(cell.fitness == 0.0 && cell.ledger.Empty(),
            "evaluation requires a freshly reset grid");
  }

  const int w = static_cast<int>(width_);
  const int h = static_cast<int>(height_);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      PlayerState& self = cells_[static_cast<std::size_t>(r) * w + c];
      for (const auto& edge : kMatchEdges) {
        const int nr = (r + edge[0] + h) % h;
        const int nc = (c + edge[1] + w) % w;
        PlayerState& other = cells_[static_cast<std::size_t>(nr) * w + nc];
        const MatchResult m = PlayMatch(self.genome, other.genome, self.ledger, other.ledger,
                                        ga.rounds_per_match, payoff);
        self.fitness += m.total_a;
        other.fitness += m.total_b;
      }
    }
  }
  evaluated_ = true;
}

Grid Grid::NextGeneration(const GaParams& ga, Rng& rng) const {
  Require(evaluated_, "next generation requires an evaluated grid");
  Require(ga.crossover_rate >= 0.0 && ga.crossover_rate <= 1.0,
          "crossover rate outside [0,1]");

  Grid next(width_, height_);
  const int w = static_cast<int>(width_);
  const int h = static_cast<int>(height_);

  std::array<const PlayerState*, 9> hood{};
  std::array<double, 9> weights{};

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double min_fitness = cells_[static_cast<std::size_t>(r) * w + c].fitness;
      for (int i = 0; i < 9; ++i) {
        const int nr = (r + kNeighbourhood[i][0] + h) % h;
        const int nc = (c + kNeighbourhood[i][1] + w) % w;
        hood[i] = &cells_[static_cast<std::size_t>(nr) * w + nc];
        min_fitness = std::min(min_fitness, hood[i]->fitness);
      }
      double total = 0.0;
      for (int i = 0; i < 9; ++i) {
        weights[i] = hood[i]->fitness - min_fitness + kRouletteEpsilon;
        total += weights[i];
      }

      const auto spin = [&]() -> const Chromosome& {
        const double u = Uniform01(rng) * total;
        double cumulative = 0.0;
        for (int i = 0; i < 9; ++i) {
          cumulative += weights[i];
          if (u < cumulative) { return hood[i]->genome; }
        }
        return hood[8]->genome;
      };

      const Chromosome& parent1 = spin();
      const Chromosome& parent2 = spin();

      Chromosome child = parent1;
      if (Uniform01(rng) < ga.crossover_rate) {
        const std::size_t locus =
            1 + static_cast<std::size_t>(Uniform01(rng) * (Chromosome::kBits - 1));
        child = Crossover(parent1, parent2, std::min<std::size_t>(locus, 70)).first;
      }
      next.cells_[static_cast<std::size_t>(r) * w + c].genome =
          Mutate(child, ga.mutation_rate, rng);
    }
  }
  return next;
}

GenerationStats Grid::Stats() const {
  GenerationStats stats;
  double theta_sum = 0.0;
  double fitness_sum = 0.0;
  std::uint64_t coop_moves = 0;
  std::uint64_t total_moves = 0;
  std::array<std::uint32_t, kPlayerClassCount> class_counts{};

  for (const PlayerState& cell : cells_) {
    theta_sum += cell.ledger.ExpectedCooperation();
    fitness_sum += cell.fitness;
    coop_moves += cell.ledger.coop_count;
    total_moves += cell.ledger.TotalMoves();
    const PlayerClass cls = ClassifyCooperation(cell.genome.CooperationFraction() * 100.0);
    ++class_counts[static_cast<std::size_t>(cls)];
  }

  const double n = static_cast<double>(cells_.size());
  for (std::size_t i = 0; i < kPlayerClassCount; ++i) {
    stats.class_shares[i] = 100.0 * static_cast<double>(class_counts[i]) / n;
  }
  stats.mean_theta = theta_sum / n;
  stats.mean_fitness = fitness_sum / n;
  stats.coop_move_fraction =
      total_moves == 0 ? 1.0
                       : static_cast<double>(coop_moves) / static_cast<double>(total_moves);
  return stats;
}

void WriteGridCsv(const Grid& grid, std::ostream& out) {
  out << "row,col,genome,coop_count,defect_count,theta,fitness,class\n";
  for (std::uint32_t r = 0; r < grid.height(); ++r) {
    for (std::uint32_t c = 0; c < grid.width(); ++c) {
      const PlayerState& cell = grid.Cell(r, c);
      const PlayerClass cls = ClassifyCooperation(cell.genome.CooperationFraction() * 100.0);
      out << r << ',' << c << ',' << cell.genome.ToString() << ',' << cell.ledger.coop_count
          << ',' << cell.ledger.defect_count << ','
          << FormatFixed6(cell.ledger.ExpectedCooperation()) << ','
          << FormatFixed6(cell.fitness) << ',' << PlayerClassName(cls) << '\n';
    }
  }
}

}  // namespace bizgame
