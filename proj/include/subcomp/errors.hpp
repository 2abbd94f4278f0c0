#pragma once

#include <stdexcept>
#include <string>

namespace subcomp {

/// Invalid graph construction or an out-of-range vertex reference.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 or edge-list text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver refused to run because the instance exceeds its work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guaranteed construction failed its own verification. Always a bug.
class ImplementationDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace subcomp
