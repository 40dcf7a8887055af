#ifndef BIZGAME_REPUTATION_HPP
#define BIZGAME_REPUTATION_HPP

#include <cstdint>
#include <limits>

#include "bizgame/errors.hpp"
#include "bizgame/genome.hpp"

namespace bizgame {

// Per-player record of cooperative and defective moves. Counters only grow
// within a generation; offspring start from an empty record.
struct TransactionHistory {
  std::uint64_t coop_count = 0;
  std::uint64_t defect_count = 0;

  void Record(Move move) {
    std::uint64_t& counter = (move == Move::Cooperate) ? coop_count : defect_count;
    Require(counter < std::numeric_limits<std::uint64_t>::max(),
            "transaction counter overflow");
    ++counter;
  }

  // Reputation score: cooperative share of all recorded moves. An empty
  // record scores 1.0; players start fully trusted.
  double ExpectedCooperation() const {
    const std::uint64_t total = coop_count + defect_count;
    if (total == 0) { return 1.0; }
    return static_cast<double>(coop_count) / static_cast<double>(total);
  }

  std::uint64_t TotalMoves() const { return coop_count + defect_count; }
  bool Empty() const { return coop_count == 0 && defect_count == 0; }
};

}  // namespace bizgame

#endif  // BIZGAME_REPUTATION_HPP
