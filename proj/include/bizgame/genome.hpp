#ifndef BIZGAME_GENOME_HPP
#define BIZGAME_GENOME_HPP

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "bizgame/errors.hpp"
#include "bizgame/rng.hpp"

namespace bizgame {

// Bit polarity is fixed project-wide: 0 = Cooperate, 1 = Defect.
// The all-zero chromosome is therefore the unconditional cooperator.
enum class Move : std::uint8_t { Cooperate = 0, Defect = 1 };

constexpr int MoveBit(Move m) { return static_cast<int>(m); }
constexpr Move MoveFromBit(int bit) { return bit ? Move::Defect : Move::Cooperate; }
constexpr Move Opposite(Move m) { return m == Move::Cooperate ? Move::Defect : Move::Cooperate; }
constexpr char MoveChar(Move m) { return m == Move::Cooperate ? 'C' : 'D'; }

// One round seen from one player's side: (own move, opponent move).
// Codes 0..3 = CC, CD, DC, DD with the own move in the high bit.
struct JointOutcome {
  Move own = Move::Cooperate;
  Move opponent = Move::Cooperate;

  constexpr int Code() const { return MoveBit(own) * 2 + MoveBit(opponent); }

  static JointOutcome FromCode(int code) {
    Require(code >= 0 && code <= 3, "JointOutcome code must be in [0,3]");
    return JointOutcome{MoveFromBit(code >> 1), MoveFromBit(code & 1)};
  }

  bool operator==(const JointOutcome&) const = default;
};

// What a strategy is allowed to see when choosing its move for a round.
// round_number is 1-based. recent_outcomes holds the last up-to-3 rounds,
// oldest first; opponent_opening holds the opponent's round-1 and round-2
// moves once played. Consistency (outcome_count == min(round-1,3) and
// opening_count == min(round-1,2)) is enforced at decode time.
struct MatchContext {
  std::uint32_t round_number = 1;
  std::array<Move, 2> opponent_opening{};
  std::uint8_t opening_count = 0;
  std::array<JointOutcome, 3> recent_outcomes{};
  std::uint8_t outcome_count = 0;

  // Shift the window forward after a round has been played.
  void Advance(Move own, Move opponent) {
    if (opening_count < 2) { opponent_opening[opening_count++] = opponent; }
    if (outcome_count < 3) {
      recent_outcomes[outcome_count++] = JointOutcome{own, opponent};
    } else {
      recent_outcomes[0] = recent_outcomes[1];
      recent_outcomes[1] = recent_outcomes[2];
      recent_outcomes[2] = JointOutcome{own, opponent};
    }
    ++round_number;
  }
};

// Cooperativeness bands over the chromosome's cooperative-bit percentage.
// Declaration order matches the stats/CSV column order.
enum class PlayerClass : std::uint8_t {
  VeryCooperative = 0,
  Cooperative,
  Good,
  Okay,
  Dishonest,
  VeryDishonest,
};

constexpr std::size_t kPlayerClassCount = 6;

const char* PlayerClassName(PlayerClass c);

// Total classification of a cooperation percentage in [0,100].
// Bands: <35, [35,45), [45,50), [50,55), [55,65], >65.
PlayerClass ClassifyCooperation(double coop_percent);

// 71-bit memory-3 strategy.
//
// Bits 0..63  : main table. The move for round >= 4 given the last three
//               outcomes (o1 oldest .. o3 newest) sits at 16*o1 + 4*o2 + o3.
// Bit  64     : round-1 move.
// Bits 65..66 : round-2 move, indexed by the opponent's round-1 move bit.
// Bits 67..70 : round-3 move, indexed by 2*bit(opp round 1) + bit(opp round 2).
//
// The text form is 71 chars of '0'/'1' with bit 0 first; this order is part
// of the file format and must not change.
class Chromosome {
 public:
  static constexpr std::size_t kMainTableBits = 64;
  static constexpr std::size_t kOpeningBits = 7;
  static constexpr std::size_t kBits = kMainTableBits + kOpeningBits;

  Chromosome() = default;  // all-cooperate

  Move At(std::size_t bit) const {
    Require(bit < kBits, "chromosome bit index out of range");
    return MoveFromBit(bits_.test(bit));
  }

  void Set(std::size_t bit, Move m) {
    Require(bit < kBits, "chromosome bit index out of range");
    bits_.set(bit, m == Move::Defect);
  }

  // The move this strategy plays in the context's round.
  Move NextMove(const MatchContext& ctx) const;

  // Cooperate bits over all 71 bits.
  double CooperationFraction() const {
    return static_cast<double>(kBits - bits_.count()) / static_cast<double>(kBits);
  }

  std::string ToString() const;
  static Chromosome FromString(std::string_view text);  // throws ValidationError

  // Each bit drawn fair and independent; consumes exactly one generator
  // call per bit (71 total), LSB taken.
  static Chromosome Random(Rng& rng);

  static Chromosome AllCooperate() { return Chromosome(); }
  static Chromosome AllDefect() {
    Chromosome g;
    g.bits_.set();
    return g;
  }

  bool operator==(const Chromosome&) const = default;

 private:
  std::bitset<kBits> bits_;  // 1 = defect
};

// Single-point recombination. locus in [1,70]: child 1 takes bits [0,locus)
// from a and [locus,71) from b, child 2 the complement.
std::pair<Chromosome, Chromosome> Crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t locus);

// Independent per-bit flips. Consumes exactly 71 uniform draws.
Chromosome Mutate(const Chromosome& genome, double per_bit_rate, Rng& rng);

inline Move Chromosome::NextMove(const MatchContext& ctx) const {
  const std::uint32_t round = ctx.round_number;
  Require(round >= 1, "round_number is 1-based");
  const std::uint32_t before = round - 1;
  Require(ctx.outcome_count == (before < 3 ? before : 3),
          "MatchContext outcome window inconsistent with round number");
  Require(ctx.opening_count == (before < 2 ? before : 2),
          "MatchContext opening record inconsistent with round number");

  std::size_t index;
  switch (round) {
    case 1:
      index = kMainTableBits;
      break;
    case 2:
      index = kMainTableBits + 1 + MoveBit(ctx.opponent_opening[0]);
      break;
    case 3:
      index = kMainTableBits + 3 + 2 * MoveBit(ctx.opponent_opening[0]) +
              MoveBit(ctx.opponent_opening[1]);
      break;
    default:
      index = static_cast<std::size_t>(16 * ctx.recent_outcomes[0].Code() +
                                       4 * ctx.recent_outcomes[1].Code() +
                                       ctx.recent_outcomes[2].Code());
      break;
  }
  return MoveFromBit(bits_.test(index));
}

}  // namespace bizgame

#endif  // BIZGAME_GENOME_HPP
