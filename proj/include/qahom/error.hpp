#pragma once

#include <stdexcept>
#include <string>

namespace qahom {

// Raised when a structure violates one of its algebraic invariants
// (filtration preservation, d^2 = 0, commuting squares, ...). The message
// carries the located witness.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qahom
