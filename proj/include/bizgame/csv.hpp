#ifndef BIZGAME_CSV_HPP
#define BIZGAME_CSV_HPP

#include <string>

namespace bizgame {

// All CSV numbers are written with 6 decimals and a '.' separator,
// independent of locale.
std::string FormatFixed6(double value);

// The double an external reader obtains by parsing FormatFixed6(value).
// Cross-replicate aggregates are computed over these so that recomputing a
// mean from the emitted CSVs reproduces the aggregate file exactly.
double RoundToSerialized(double value);

}  // namespace bizgame

#endif  // BIZGAME_CSV_HPP
