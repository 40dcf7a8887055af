#ifndef BIZGAME_ERRORS_HPP
#define BIZGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bizgame {

// Broken API precondition or invariant. Indicates a caller bug, not bad user input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bad user-supplied input: config files, genome strings, CLI values.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Require(bool condition, const char* message) {
  if (!condition) { throw ContractViolation(message); }
}

}  // namespace bizgame

#endif  // BIZGAME_ERRORS_HPP
