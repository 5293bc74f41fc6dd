#pragma once

#include <stdexcept>
#include <string>

namespace tlfrac {

/// Raised when a truncated system cannot be solved (singular or numerically
/// singular matrix). The message carries the pivot diagnostic.
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tlfrac
