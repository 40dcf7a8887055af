#include "bizgame/payoff.hpp"

namespace bizgame {

const char* SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::NonIncentive: return "non_incentive";
    case Scheme::ProIncentive: return "pro_incentive";
  }
  throw ContractViolation("unknown scheme");
}

}  // namespace bizgame
