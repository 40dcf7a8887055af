#include "bizgame/genome.hpp"

#include <string>
#include <utility>

namespace bizgame {

const char* PlayerClassName(PlayerClass c) {
  switch (c) {
    case PlayerClass::VeryCooperative: return "very_coop";
    case PlayerClass::Cooperative: return "coop";
    case PlayerClass::Good: return "good";
    case PlayerClass::Okay: return "okay";
    case PlayerClass::Dishonest: return "dishonest";
    case PlayerClass::VeryDishonest: return "very_dishonest";
  }
  throw ContractViolation("unknown player class");
}

PlayerClass ClassifyCooperation(double coop_percent) {
  Require(coop_percent >= 0.0 && coop_percent <= 100.0,
          "cooperation percentage outside [0,100]");
  if (coop_percent < 35.0) { return PlayerClass::VeryDishonest; }
  if (coop_percent < 45.0) { return PlayerClass::Dishonest; }
  if (coop_percent < 50.0) { return PlayerClass::Okay; }
  if (coop_percent < 55.0) { return PlayerClass::Good; }
  if (coop_percent <= 65.0) { return PlayerClass::Cooperative; }
  return PlayerClass::VeryCooperative;
}

std::string Chromosome::ToString() const {
  std::string text(kBits, '0');
  for (std::size_t i = 0; i < kBits; ++i) {
    if (bits_.test(i)) { text[i] = '1'; }
  }
  return text;
}

Chromosome Chromosome::FromString(std::string_view text) {
  if (text.size() != kBits) {
    throw ValidationError("genome string must be exactly " + std::to_string(kBits) +
                          " characters, got " + std::to_string(text.size()));
  }
  Chromosome genome;
  for (std::size_t i = 0; i < kBits; ++i) {
    const char c = text[i];
    if (c == '1') {
      genome.bits_.set(i);
    } else if (c != '0') {
      throw ValidationError("genome string may contain only '0' and '1' (position " +
                            std::to_string(i) + ")");
    }
  }
  return genome;
}

Chromosome Chromosome::Random(Rng& rng) {
  Chromosome genome;
  for (std::size_t i = 0; i < kBits; ++i) { genome.bits_.set(i, rng() & 1u); }
  return genome;
}

std::pair<Chromosome, Chromosome> Crossover(const Chromosome& a, const Chromosome& b,
                                            std::size_t locus) {
  Require(locus >= 1 && locus < Chromosome::kBits, "crossover locus must be in [1,70]");
  Chromosome first, second;
  for (std::size_t i = 0; i < Chromosome::kBits; ++i) {
    const Move from_a = a.At(i);
    const Move from_b = b.At(i);
    first.Set(i, i < locus ? from_a : from_b);
    second.Set(i, i < locus ? from_b : from_a);
  }
  return {first, second};
}

Chromosome Mutate(const Chromosome& genome, double per_bit_rate, Rng& rng) {
  Require(per_bit_rate >= 0.0 && per_bit_rate <= 1.0, "mutation rate outside [0,1]");
  Chromosome mutated = genome;
  for (std::size_t i = 0; i < Chromosome::kBits; ++i) {
    if (Uniform01(rng) < per_bit_rate) { mutated.Set(i, Opposite(genome.At(i))); }
  }
  return mutated;
}

}  // namespace bizgame
