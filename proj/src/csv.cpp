#include "bizgame/csv.hpp"

#include <cstdio>
#include <cstdlib>

namespace bizgame {

std::string FormatFixed6(double value) {
  char buffer[64];
  // The process never calls setlocale, so "%.6f" always uses the C locale's
  // '.' separator.
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

double RoundToSerialized(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return std::strtod(buffer, nullptr);
}

}  // namespace bizgame
