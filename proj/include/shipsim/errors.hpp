#pragma once

#include <stdexcept>
#include <string>

namespace shipsim {

/// Raised when a ship or scenario file cannot be parsed or violates an
/// invariant that is enforced at load time. The message carries the
/// offending key path (e.g. "hull.C_D").
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a parameter set is structurally unusable (singular mass
/// matrix, degenerate derivative set, ...).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the integrators: non-finite derivatives or step-size underflow.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the identification routines (e.g. insufficient excitation).
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace shipsim
