#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace analog {

/// Malformed user input (log files, net files, CLI arguments).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A measure whose precondition does not hold for the given argument.
struct undefined_measure : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive search exceeds its configured budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_path_budget = 10'000'000;

/// Budget for simple-path extensions; ANALOG_PATH_BUDGET overrides the default.
inline std::uint64_t path_budget() {
  if (const char* env = std::getenv("ANALOG_PATH_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return default_path_budget;
}

}  // namespace analog
