#ifndef BIZGAME_PAYOFF_HPP
#define BIZGAME_PAYOFF_HPP

#include "bizgame/errors.hpp"
#include "bizgame/genome.hpp"

namespace bizgame {

enum class Scheme { NonIncentive, ProIncentive };

const char* SchemeName(Scheme scheme);  // "non_incentive" / "pro_incentive"

struct PayoffParams {
  Scheme scheme = Scheme::NonIncentive;
  double goods_value = 1.0;  // V, must be > 0; money and goods trade at par
};

struct RoundPayoffs {
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

// One transaction round. With V = goods_value:
//
//   non-incentive:  (C,C) -> ( V,  V)    (C,D) -> (-V, 2V)
//                   (D,C) -> (2V, -V)    (D,D) -> ( V,  V)
//
//   pro-incentive:  mutual cooperation earns each player a bonus of its own
//   reputation times V, mutual defection costs the same penalty:
//                   (C,C) -> (V + ta*V, V + tb*V)
//                   (D,D) -> (V - ta*V, V - tb*V)
//                   mixed rounds as in the non-incentive table.
//
// Reputations are validated under both schemes but only read by the
// pro-incentive rows.
inline RoundPayoffs ComputePayoffs(const PayoffParams& params, Move move_a, Move move_b,
                                   double theta_a, double theta_b) {
  Require(params.goods_value > 0.0, "goods_value must be positive");
  Require(theta_a >= 0.0 && theta_a <= 1.0, "theta_a outside [0,1]");
  Require(theta_b >= 0.0 && theta_b <= 1.0, "theta_b outside [0,1]");

  const double v = params.goods_value;
  const bool a_coop = (move_a == Move::Cooperate);
  const bool b_coop = (move_b == Move::Cooperate);

  if (a_coop != b_coop) {
    // Temptation / sucker rounds are scheme-independent.
    return a_coop ? RoundPayoffs{-v, 2.0 * v} : RoundPayoffs{2.0 * v, -v};
  }
  if (params.scheme == Scheme::NonIncentive) {
    return RoundPayoffs{v, v};  // reward and punishment coincide
  }
  if (a_coop) { return RoundPayoffs{v + theta_a * v, v + theta_b * v}; }
  return RoundPayoffs{v - theta_a * v, v - theta_b * v};
}

}  // namespace bizgame

#endif  // BIZGAME_PAYOFF_HPP
