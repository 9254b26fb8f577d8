#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgalg {

/// Default ceiling on the number of traces in a universe.
inline constexpr std::size_t kDefaultMaxTraces = 5'000'000;

/// Bounded model: states are 0..states-1, traces have at most max_len steps.
struct ModelConfig {
  int states = 2;
  int max_len = 3;
  std::size_t max_traces = kDefaultMaxTraces;

  friend bool operator==(const ModelConfig& a, const ModelConfig& b) {
    return a.states == b.states && a.max_len == b.max_len;
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Universe would exceed ModelConfig::max_traces, or a brute-force search
/// would exceed its own bound.
struct CapacityError : Error {
  using Error::Error;
};

/// Operands built under different ModelConfigs.
struct ConfigMismatch : Error {
  using Error::Error;
};

/// Fixed-point iteration did not stabilise within the lattice height.
struct MonotonicityError : Error {
  using Error::Error;
};

/// Malformed trace text, literal, or argument.
struct ValueError : Error {
  using Error::Error;
};

inline void validate(const ModelConfig& cfg) {
  if (cfg.states < 1) throw ValueError("states must be >= 1");
  if (cfg.max_len < 0) throw ValueError("max_len must be >= 0");
}

}  // namespace rgalg
