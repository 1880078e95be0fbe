#pragma once

#include <stdexcept>
#include <string>

namespace levelbound {

/// Invalid input to a library operation (bad weight range, odd n where an
/// even one is required, malformed start distribution, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The partition cannot be lumped onto a single representative per level.
class UnsupportedPartitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A non-optimal level has no probability of moving to a higher level.
class UnreachableLevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard (state count, path count) refused the request.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levelbound
