#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "core/spectral_state.hpp"

namespace qsl_test {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Deterministic uniform in [0, 1); the mapping is pinned so the stream does
/// not depend on library distribution internals.
inline double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform(rng);
}

/// Random discrete state: n levels, energies uniform in [e_lo, e_hi],
/// weights uniform, random phases.
inline qsl::DiscreteSpectralState random_state(std::mt19937_64& rng, int n,
                                               double e_lo = -5.0,
                                               double e_hi = 5.0,
                                               double hbar = 1.0) {
  std::vector<qsl::Level> levels(n);
  for (auto& lv : levels) {
    lv.energy = uniform(rng, e_lo, e_hi);
    lv.amplitude = std::polar(std::sqrt(uniform(rng) + 1e-9),
                              uniform(rng, 0.0, 2.0 * M_PI));
  }
  return qsl::DiscreteSpectralState(hbar, std::move(levels));
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Run a shell command, capturing stdout (stderr folded in).
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

}  // namespace qsl_test
