#include "bizgame/match.hpp"

namespace bizgame {

MatchResult PlayMatch(const Chromosome& genome_a, const Chromosome& genome_b,
                      TransactionHistory& ledger_a, TransactionHistory& ledger_b,
                      std::uint32_t rounds, const PayoffParams& params,
                      const TraceSink& trace) {
  Require(rounds >= 1, "a match needs at least one round");

  MatchResult result;
  MatchContext ctx_a;  // a's view: own = a, opponent = b
  MatchContext ctx_b;

  for (std::uint32_t round = 1; round <= rounds; ++round) {
    const Move move_a = genome_a.NextMove(ctx_a);
    const Move move_b = genome_b.NextMove(ctx_b);

    // Reputations as they stand before this round is recorded.
    const double theta_a = ledger_a.ExpectedCooperation();
    const double theta_b = ledger_b.ExpectedCooperation();
    const RoundPayoffs pay = ComputePayoffs(params, move_a, move_b, theta_a, theta_b);

    result.total_a += pay.payoff_a;
    result.total_b += pay.payoff_b;
    if (move_a == Move::Cooperate) { ++result.coop_moves_a; }
    if (move_b == Move::Cooperate) { ++result.coop_moves_b; }

    ledger_a.Record(move_a);
    ledger_b.Record(move_b);
    ctx_a.Advance(move_a, move_b);
    ctx_b.Advance(move_b, move_a);

    if (trace) {
      trace(RoundTrace{round, move_a, move_b, theta_a, theta_b, pay.payoff_a, pay.payoff_b});
    }
  }
  result.rounds_played = rounds;
  return result;
}

}  // namespace bizgame
