#pragma once

#include <stdexcept>

namespace tsr {

// Bad user input: malformed files, unknown vertex ids, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded (reconfiguration-graph nodes,
// brute-force subset budgets).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tsr
