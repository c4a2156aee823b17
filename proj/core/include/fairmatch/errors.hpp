#pragma once

#include <stdexcept>
#include <string>

namespace fairmatch {

// Thrown when a solver or oracle exceeds its configured budget.  Callers map
// this to an UNKNOWN outcome; it is never a silent wrong answer.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fairmatch
