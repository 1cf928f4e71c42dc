#pragma once

#include <stdexcept>
#include <string>

namespace doublet {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad arguments: non-positive tensions or volumes, wrong solver for the
/// regime, angles outside their admissible range, singular parameterization.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

/// An iteration failed to reach its tolerance within its budget.
struct ConvergenceFailure : Error {
  explicit ConvergenceFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace doublet
