#pragma once

#include <stdexcept>
#include <string>

namespace lpwb {

// An exhaustive sweep would exceed its configured cap. Never downgraded
// to silent sampling.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or inconsistent declaration.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lpwb
