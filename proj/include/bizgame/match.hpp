#ifndef BIZGAME_MATCH_HPP
#define BIZGAME_MATCH_HPP

#include <cstdint>
#include <functional>

#include "bizgame/genome.hpp"
#include "bizgame/payoff.hpp"
#include "bizgame/reputation.hpp"

namespace bizgame {

struct MatchResult {
  double total_a = 0.0;
  double total_b = 0.0;
  std::uint32_t coop_moves_a = 0;
  std::uint32_t coop_moves_b = 0;
  std::uint32_t rounds_played = 0;
};

struct RoundTrace {
  std::uint32_t round = 0;
  Move move_a = Move::Cooperate;
  Move move_b = Move::Cooperate;
  double theta_a = 0.0;
  double theta_b = 0.0;
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

using TraceSink = std::function<void(const RoundTrace&)>;

// One iterated match. Per round, both moves are decided simultaneously from
// the previous rounds only; reputations are read from the ledgers before the
// round's moves are recorded, so a move never prices its own round. Ledgers
// are the players' running generation records and keep accumulating across a
// player's matches.
MatchResult PlayMatch(const Chromosome& genome_a, const Chromosome& genome_b,
                      TransactionHistory& ledger_a, TransactionHistory& ledger_b,
                      std::uint32_t rounds, const PayoffParams& params,
                      const TraceSink& trace = nullptr);

}  // namespace bizgame

#endif  // BIZGAME_MATCH_HPP
