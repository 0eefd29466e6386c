#pragma once

#include <stdexcept>
#include <string>

namespace mv {

// Unsupported root datum, malformed labels, bad CLI input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured bound.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a precondition (e.g. a non-reduced word).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Internal data failed a structural invariant. Reaching this means either
// corrupted input data or a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mv
