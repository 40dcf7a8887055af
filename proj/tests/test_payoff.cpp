#include <string>

#include "bizgame/payoff.hpp"
#include "bizgame/rng.hpp"
#include "doctest.h"

using namespace bizgame;

namespace {

constexpr PayoffParams NonIncentive(double v = 1.0) { return {Scheme::NonIncentive, v}; }
constexpr PayoffParams ProIncentive(double v = 1.0) { return {Scheme::ProIncentive, v}; }

}  // namespace

TEST_SUITE("payoff") {

TEST_CASE("non-incentive table") {
  const auto cc = ComputePayoffs(NonIncentive(), Move::Cooperate, Move::Cooperate, 1.0, 1.0);
  CHECK(cc.payoff_a == 1.0);
  CHECK(cc.payoff_b == 1.0);

  const auto cd = ComputePayoffs(NonIncentive(), Move::Cooperate, Move::Defect, 1.0, 1.0);
  CHECK(cd.payoff_a == -1.0);
  CHECK(cd.payoff_b == 2.0);

  const auto dc = ComputePayoffs(NonIncentive(), Move::Defect, Move::Cooperate, 1.0, 1.0);
  CHECK(dc.payoff_a == 2.0);
  CHECK(dc.payoff_b == -1.0);

  const auto dd = ComputePayoffs(NonIncentive(), Move::Defect, Move::Defect, 1.0, 1.0);
  CHECK(dd.payoff_a == 1.0);
  CHECK(dd.payoff_b == 1.0);
}

TEST_CASE("pro-incentive table scales reward and punishment by own reputation") {
  const auto cc = ComputePayoffs(ProIncentive(), Move::Cooperate, Move::Cooperate, 1.0, 1.0);
  CHECK(cc.payoff_a == 2.0);
  CHECK(cc.payoff_b == 2.0);

  const auto dd = ComputePayoffs(ProIncentive(), Move::Defect, Move::Defect, 1.0, 0.5);
  CHECK(dd.payoff_a == 0.0);
  CHECK(dd.payoff_b == 0.5);

  const auto cc2 = ComputePayoffs(ProIncentive(2.0), Move::Cooperate, Move::Cooperate, 0.25, 0.75);
  CHECK(cc2.payoff_a == 2.5);
  CHECK(cc2.payoff_b == 3.5);

  // Mixed rounds carry no reputation term.
  const auto cd = ComputePayoffs(ProIncentive(), Move::Cooperate, Move::Defect, 0.3, 0.9);
  CHECK(cd.payoff_a == -1.0);
  CHECK(cd.payoff_b == 2.0);
}

TEST_CASE("zero reputation collapses pro-incentive onto the plain table") {
  const Move moves[2] = {Move::Cooperate, Move::Defect};
  for (Move a : moves) {
    for (Move b : moves) {
      const auto pro = ComputePayoffs(ProIncentive(3.5), a, b, 0.0, 0.0);
      const auto plain = ComputePayoffs(NonIncentive(3.5), a, b, 0.0, 0.0);
      CHECK(pro.payoff_a == plain.payoff_a);
      CHECK(pro.payoff_b == plain.payoff_b);
    }
  }
}

TEST_CASE("non-incentive output ignores reputations") {
  Rng rng(42);
  const Move moves[2] = {Move::Cooperate, Move::Defect};
  for (int trial = 0; trial < 100; ++trial) {
    const double ta = Uniform01(rng);
    const double tb = Uniform01(rng);
    for (Move a : moves) {
      for (Move b : moves) {
        const auto with_theta = ComputePayoffs(NonIncentive(2.5), a, b, ta, tb);
        const auto baseline = ComputePayoffs(NonIncentive(2.5), a, b, 1.0, 1.0);
        CHECK(with_theta.payoff_a == baseline.payoff_a);
        CHECK(with_theta.payoff_b == baseline.payoff_b);
      }
    }
  }
}

TEST_CASE("swapping players swaps payoffs") {
  Rng rng(43);
  const Move moves[2] = {Move::Cooperate, Move::Defect};
  for (int trial = 0; trial < 100; ++trial) {
    const double ta = Uniform01(rng);
    const double tb = Uniform01(rng);
    const double v = 0.5 + Uniform01(rng) * 10.0;
    for (Move a : moves) {
      for (Move b : moves) {
        for (Scheme s : {Scheme::NonIncentive, Scheme::ProIncentive}) {
          const auto fwd = ComputePayoffs({s, v}, a, b, ta, tb);
          const auto rev = ComputePayoffs({s, v}, b, a, tb, ta);
          CHECK(fwd.payoff_a == rev.payoff_b);
          CHECK(fwd.payoff_b == rev.payoff_a);
        }
      }
    }
  }
}

TEST_CASE("payoff orderings") {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const double v = 0.01 + Uniform01(rng) * 100.0;
    // Plain scheme: temptation > reward = punishment > sucker.
    const double t = ComputePayoffs(NonIncentive(v), Move::Defect, Move::Cooperate, 1, 1).payoff_a;
    const double r = ComputePayoffs(NonIncentive(v), Move::Cooperate, Move::Cooperate, 1, 1).payoff_a;
    const double p = ComputePayoffs(NonIncentive(v), Move::Defect, Move::Defect, 1, 1).payoff_a;
    const double s = ComputePayoffs(NonIncentive(v), Move::Cooperate, Move::Defect, 1, 1).payoff_a;
    CHECK(t > r);
    CHECK(r == p);
    CHECK(p > s);

    for (double theta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double rp = ComputePayoffs(ProIncentive(v), Move::Cooperate, Move::Cooperate, theta, theta).payoff_a;
      const double pp = ComputePayoffs(ProIncentive(v), Move::Defect, Move::Defect, theta, theta).payoff_a;
      if (theta == 0.0) {
        CHECK(rp == pp);
      } else {
        CHECK(rp > pp);  // mutual cooperation strictly beats mutual defection
      }
      CHECK(rp - s >= t);  // R + |S| = V(2 + theta) >= T = 2V
      CHECK(pp >= 0.0);
      CHECK(pp > s);
    }
  }
}

TEST_CASE("reputation and goods-value bounds are enforced") {
  CHECK_THROWS_AS(ComputePayoffs(ProIncentive(), Move::Cooperate, Move::Cooperate, -0.1, 0.5),
                  ContractViolation);
  CHECK_THROWS_AS(ComputePayoffs(ProIncentive(), Move::Cooperate, Move::Cooperate, 0.5, 1.1),
                  ContractViolation);
  CHECK_THROWS_AS(ComputePayoffs(NonIncentive(), Move::Cooperate, Move::Cooperate, 0.5, 2.0),
                  ContractViolation);
  CHECK_THROWS_AS(ComputePayoffs({Scheme::NonIncentive, 0.0}, Move::Cooperate, Move::Cooperate, 1, 1),
                  ContractViolation);
  CHECK_THROWS_AS(ComputePayoffs({Scheme::ProIncentive, -2.0}, Move::Defect, Move::Defect, 1, 1),
                  ContractViolation);
}

TEST_CASE("scheme names") {
  CHECK(std::string(SchemeName(Scheme::NonIncentive)) == "non_incentive");
  CHECK(std::string(SchemeName(Scheme::ProIncentive)) == "pro_incentive");
}

}  // TEST_SUITE
