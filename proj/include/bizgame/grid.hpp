#ifndef BIZGAME_GRID_HPP
#define BIZGAME_GRID_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bizgame/genome.hpp"
#include "bizgame/match.hpp"
#include "bizgame/payoff.hpp"
#include "bizgame/reputation.hpp"
#include "bizgame/rng.hpp"

namespace bizgame {

struct PlayerState {
  Chromosome genome;
  TransactionHistory ledger;
  double fitness = 0.0;
};

struct GaParams {
  double crossover_rate = 0.5;
  double mutation_rate = 0.001;  // per bit
  std::uint32_t rounds_per_match = 100;
};

struct GenerationStats {
  std::uint32_t generation = 0;
  std::array<double, kPlayerClassCount> class_shares{};  // percent, PlayerClass order
  double mean_theta = 0.0;
  double mean_fitness = 0.0;
  double coop_move_fraction = 0.0;
};

// Toroidal lattice of players, row-major. Width and height must be at least 3
// so every cell has 8 distinct Moore neighbours.
class Grid {
 public:
  Grid(std::uint32_t width, std::uint32_t height);

  // Fresh population of uniform random genomes, empty ledgers.
  static Grid Random(std::uint32_t width, std::uint32_t height, Rng& rng);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::size_t PlayerCount() const { return cells_.size(); }
  bool evaluated() const { return evaluated_; }

  std::size_t Index(std::uint32_t row, std::uint32_t col) const {
    Require(row < height_ && col < width_, "grid coordinate out of range");
    return static_cast<std::size_t>(row) * width_ + col;
  }

  PlayerState& Cell(std::uint32_t row, std::uint32_t col) { return cells_[Index(row, col)]; }
  const PlayerState& Cell(std::uint32_t row, std::uint32_t col) const {
    return cells_[Index(row, col)];
  }
  std::vector<PlayerState>& cells() { return cells_; }
  const std::vector<PlayerState>& cells() const { return cells_; }

  // Plays every Moore-neighbour pair exactly once, in canonical order:
  // cells row-major, each cell matching its East, South-West, South and
  // South-East neighbours. Fitness and ledgers accumulate through the
  // matches; every player ends up having played 8 matches. Requires a
  // freshly reset grid (zero fitness, empty ledgers).
  void EvaluateGeneration(const PayoffParams& payoff, const GaParams& ga);

  // Synchronous generational replacement. Per cell: two parents by roulette
  // over the 9-cell Moore neighbourhood (fitness shifted by the neighbourhood
  // minimum plus epsilon), single-point crossover with probability
  // crossover_rate keeping the child whose head comes from parent 1,
  // otherwise a clone of parent 1; then per-bit mutation. Offspring start
  // with empty ledgers and zero fitness. Requires an evaluated grid.
  Grid NextGeneration(const GaParams& ga, Rng& rng) const;

  // Population snapshot: class shares, mean reputation, mean fitness and the
  // cooperative share of all moves recorded this generation (1.0 when no
  // moves have been recorded yet). generation is left 0 for the caller.
  GenerationStats Stats() const;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<PlayerState> cells_;
  bool evaluated_ = false;
};

// Per-player dump: row,col,genome,coop_count,defect_count,theta,fitness,class
void WriteGridCsv(const Grid& grid, std::ostream& out);

}  // namespace bizgame

#endif  // BIZGAME_GRID_HPP
