#pragma once

#include <stdexcept>
#include <string>

namespace tecsim {

/// Bad or missing configuration. `key()` names the offending entry when known.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

/// Numerical fault raised while simulating (Euler singularity, observer
/// divergence, non-finite state). Carries the simulation time when known.
class SimulationFault : public std::runtime_error {
public:
  explicit SimulationFault(const std::string& what, double time = -1.0)
      : std::runtime_error(what), time_(time) {}

  double time() const noexcept { return time_; }
  bool has_time() const noexcept { return time_ >= 0.0; }

private:
  double time_;
};

class TrimError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class LowAirspeedError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class SingularAllocationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tecsim
