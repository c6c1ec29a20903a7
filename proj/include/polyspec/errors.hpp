#pragma once

#include <stdexcept>
#include <string>

namespace polyspec {

/// A caller violated an operation's precondition (bad argument, wrong shape).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A construction produced something that contradicts its own post-conditions.
/// Always signals a bug in the library, never bad input.
struct ConstructionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// An iterative numeric routine failed to converge or produced an
/// inconsistent rank.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polyspec
