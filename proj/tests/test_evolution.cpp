#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bizgame/grid.hpp"
#include "doctest.h"
#include "reference.hpp"

using namespace bizgame;

namespace {

Grid UniformGrid(std::uint32_t width, std::uint32_t height, const Chromosome& genome) {
  Grid grid(width, height);
  for (PlayerState& cell : grid.cells()) { cell.genome = genome; }
  return grid;
}

Chromosome GenomeWithOnes(int ones) {
  Chromosome g;
  for (int i = 0; i < ones; ++i) { g.Set(static_cast<std::size_t>(i), Move::Defect); }
  return g;
}

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("grid dimensions are validated") {
  CHECK_THROWS_AS(Grid(2, 5), ContractViolation);
  CHECK_THROWS_AS(Grid(5, 2), ContractViolation);
  CHECK_NOTHROW(Grid(3, 3));
  Grid g(4, 6);
  CHECK(g.width() == 4);
  CHECK(g.height() == 6);
  CHECK(g.PlayerCount() == 24);
  CHECK_THROWS_AS(g.Index(6, 0), ContractViolation);
  CHECK_THROWS_AS(g.Index(0, 4), ContractViolation);
  CHECK(g.Index(5, 3) == 23);
}

TEST_CASE("random grids are seed-deterministic") {
  Rng r1(11), r2(11), r3(12);
  const Grid a = Grid::Random(5, 4, r1);
  const Grid b = Grid::Random(5, 4, r2);
  const Grid c = Grid::Random(5, 4, r3);
  bool same_ab = true, same_ac = true;
  for (std::size_t i = 0; i < a.PlayerCount(); ++i) {
    same_ab = same_ab && a.cells()[i].genome == b.cells()[i].genome;
    same_ac = same_ac && a.cells()[i].genome == c.cells()[i].genome;
  }
  CHECK(same_ab);
  CHECK_FALSE(same_ac);
  CHECK_FALSE(a.cells()[0].genome == a.cells()[1].genome);
}

TEST_CASE("every player plays exactly eight matches") {
  Rng rng(21);
  Grid grid = Grid::Random(3, 3, rng);
  const GaParams ga{0.5, 0.001, 25};
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, ga);
  for (const PlayerState& cell : grid.cells()) {
    CHECK(cell.ledger.TotalMoves() == 8u * 25u);
  }
}

TEST_CASE("uniform cooperators earn the full plain-scheme pie") {
  Grid grid = UniformGrid(5, 5, Chromosome::AllCooperate());
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, {0.5, 0.001, 100});
  for (const PlayerState& cell : grid.cells()) {
    CHECK(cell.fitness == 800.0);
    CHECK(cell.ledger.coop_count == 800);
    CHECK(cell.ledger.defect_count == 0);
  }
  const GenerationStats stats = grid.Stats();
  CHECK(stats.mean_fitness == 800.0);
  CHECK(stats.mean_theta == 1.0);
  CHECK(stats.coop_move_fraction == 1.0);
  CHECK(stats.class_shares[static_cast<int>(PlayerClass::VeryCooperative)] == 100.0);
}

TEST_CASE("uniform defectors under incentives lose only their first-ever round") {
  Grid grid = UniformGrid(4, 4, Chromosome::AllDefect());
  grid.EvaluateGeneration({Scheme::ProIncentive, 1.0}, {0.5, 0.001, 100});
  for (const PlayerState& cell : grid.cells()) {
    CHECK(cell.fitness == 799.0);
    CHECK(cell.ledger.defect_count == 800);
  }
  const GenerationStats stats = grid.Stats();
  CHECK(stats.mean_theta == 0.0);
  CHECK(stats.coop_move_fraction == 0.0);
  CHECK(stats.class_shares[static_cast<int>(PlayerClass::VeryDishonest)] == 100.0);
}

TEST_CASE("checkerboard of pure strategies has exact fitness") {
  Grid grid(4, 4);
  for (std::uint32_t r = 0; r < 4; ++r) {
    for (std::uint32_t c = 0; c < 4; ++c) {
      grid.Cell(r, c).genome =
          ((r + c) % 2 == 0) ? Chromosome::AllCooperate() : Chromosome::AllDefect();
    }
  }
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, {0.5, 0.001, 100});
  // Orthogonal neighbours are the other colour, diagonal neighbours the same:
  // cooperators score 4*(-100) + 4*(+100), defectors 4*(+200) + 4*(+100).
  for (std::uint32_t r = 0; r < 4; ++r) {
    for (std::uint32_t c = 0; c < 4; ++c) {
      const double want = ((r + c) % 2 == 0) ? 0.0 : 1200.0;
      CHECK(grid.Cell(r, c).fitness == want);
    }
  }
  const GenerationStats stats = grid.Stats();
  CHECK(stats.mean_fitness == 600.0);
  CHECK(stats.mean_theta == 0.5);
  CHECK(stats.coop_move_fraction == 0.5);
  CHECK(stats.class_shares[static_cast<int>(PlayerClass::VeryCooperative)] == 50.0);
  CHECK(stats.class_shares[static_cast<int>(PlayerClass::VeryDishonest)] == 50.0);
}

TEST_CASE("evaluation matches the straight-line reference grid") {
  for (const bool pro : {false, true}) {
    Rng rng(pro ? 31u : 32u);
    Grid grid = Grid::Random(4, 4, rng);
    std::vector<bizref::Bits> genomes;
    for (const PlayerState& cell : grid.cells()) {
      genomes.push_back(bizref::BitsFromString(cell.genome.ToString()));
    }
    grid.EvaluateGeneration({pro ? Scheme::ProIncentive : Scheme::NonIncentive, 1.5},
                            {0.5, 0.001, 7});
    const bizref::RefGridResult want = bizref::RefEvaluateGrid(genomes, 4, 4, 7, pro, 1.5);
    for (std::size_t i = 0; i < grid.PlayerCount(); ++i) {
      CHECK(grid.cells()[i].fitness == want.fitness[i]);
      CHECK(grid.cells()[i].ledger.coop_count == want.ledgers[i].coop);
      CHECK(grid.cells()[i].ledger.defect_count == want.ledgers[i].defect);
    }
  }
}

TEST_CASE("lifecycle contracts") {
  Rng rng(41);
  Grid grid = Grid::Random(3, 3, rng);
  const GaParams ga{0.5, 0.001, 5};
  CHECK_THROWS_AS(grid.NextGeneration(ga, rng), ContractViolation);  // not evaluated yet
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, ga);
  CHECK(grid.evaluated());
  CHECK_THROWS_AS(grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, ga),
                  ContractViolation);  // no longer fresh
  const Grid next = grid.NextGeneration(ga, rng);
  CHECK(next.PlayerCount() == grid.PlayerCount());
  CHECK(next.width() == grid.width());
  CHECK_FALSE(next.evaluated());
  for (const PlayerState& cell : next.cells()) {
    CHECK(cell.fitness == 0.0);
    CHECK(cell.ledger.Empty());
  }
}

TEST_CASE("homogeneous population without mutation is a fixed point") {
  Rng rng(51);
  const Chromosome seed = Chromosome::Random(rng);
  Grid grid = UniformGrid(4, 3, seed);
  grid.EvaluateGeneration({Scheme::ProIncentive, 1.0}, {0.9, 0.0, 10});
  const Grid next = grid.NextGeneration({0.9, 0.0, 10}, rng);
  for (const PlayerState& cell : next.cells()) { CHECK(cell.genome == seed); }
}

TEST_CASE("a dominant cell sweeps the next generation") {
  // On a 3x3 torus every Moore neighbourhood is the whole grid, so a fitness
  // spike dwarfs the epsilon weights of the flat remainder in every roulette.
  Grid grid = UniformGrid(3, 3, Chromosome::AllCooperate());
  grid.Cell(1, 1).genome = Chromosome::AllDefect();
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, {0.5, 0.0, 2});
  for (PlayerState& cell : grid.cells()) { cell.fitness = 0.0; }
  grid.Cell(1, 1).fitness = 1000.0;
  Rng rng(61);
  const Grid next = grid.NextGeneration({0.5, 0.0, 2}, rng);
  for (const PlayerState& cell : next.cells()) {
    CHECK(cell.genome == Chromosome::AllDefect());
  }
}

TEST_CASE("generational evolution is reproducible bit for bit") {
  auto run = [](std::uint64_t seed) {
    Rng rng(seed);
    Grid grid = Grid::Random(4, 4, rng);
    const GaParams ga{0.5, 0.01, 10};
    std::vector<std::string> genomes;
    for (int gen = 0; gen < 4; ++gen) {
      grid.EvaluateGeneration({Scheme::ProIncentive, 1.0}, ga);
      grid = grid.NextGeneration(ga, rng);
    }
    for (const PlayerState& cell : grid.cells()) { genomes.push_back(cell.genome.ToString()); }
    return genomes;
  };
  CHECK(run(7) == run(7));
  CHECK(run(7) != run(8));
}

TEST_CASE("class shares always sum to one hundred") {
  Rng rng(71);
  Grid grid = Grid::Random(5, 3, rng);
  const GenerationStats stats = grid.Stats();
  double sum = 0.0;
  for (double s : stats.class_shares) { sum += s; }
  CHECK(sum == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("stats report the mid-band classes") {
  // 36 cooperate bits of 71 is 50.70%, inside the [50,55) band.
  Grid grid = UniformGrid(3, 3, GenomeWithOnes(35));
  const GenerationStats stats = grid.Stats();
  CHECK(stats.class_shares[static_cast<int>(PlayerClass::Good)] == 100.0);
  CHECK(stats.class_shares[static_cast<int>(PlayerClass::VeryCooperative)] == 0.0);
}

TEST_CASE("mean reputation averages the live ledgers") {
  Grid grid(3, 3);
  for (PlayerState& cell : grid.cells()) {
    cell.ledger.coop_count = 1;
    cell.ledger.defect_count = 3;
  }
  CHECK(grid.Stats().mean_theta == 0.25);
  Grid fresh(3, 3);
  CHECK(fresh.Stats().mean_theta == 1.0);  // empty ledgers default optimistic
  CHECK(fresh.Stats().coop_move_fraction == 1.0);
}

TEST_CASE("grid csv dump") {
  Grid grid = UniformGrid(3, 3, Chromosome::AllCooperate());
  grid.Cell(2, 1).genome = Chromosome::AllDefect();
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, {0.5, 0.001, 2});
  std::ostringstream out;
  WriteGridCsv(grid, out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "row,col,genome,coop_count,defect_count,theta,fitness,class");
  std::vector<std::string> rows;
  while (std::getline(in, line)) { rows.push_back(line); }
  REQUIRE(rows.size() == 9);
  // Row-major: row 7 is cell (2,1), the lone defector.
  CHECK(rows[7].find(Chromosome::AllDefect().ToString()) != std::string::npos);
  CHECK(rows[7].substr(0, 4) == "2,1,");
  CHECK(rows[7].find("very_dishonest") != std::string::npos);
  CHECK(rows[0].find("very_coop") != std::string::npos);
  CHECK(rows[0].find("1.000000") != std::string::npos);  // theta of a pure cooperator
}

TEST_CASE("plain-scheme totals stay inside the pie bounds") {
  Rng rng(81);
  Grid grid = Grid::Random(4, 4, rng);
  const std::uint32_t rounds = 20;
  grid.EvaluateGeneration({Scheme::NonIncentive, 1.0}, {0.5, 0.001, rounds});
  double total = 0.0;
  for (const PlayerState& cell : grid.cells()) { total += cell.fitness; }
  const double matches = 4.0 * 16;  // 4*W*H edges
  CHECK(total <= 2.0 * rounds * matches);
  CHECK(total >= 1.0 * rounds * matches);
}

}  // TEST_SUITE
