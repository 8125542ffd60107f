#pragma once

namespace qsl {

/// Every numeric tolerance used by the library, in one record.
/// Defaults are the values the test suites pin; callers may override
/// individual knobs without touching the rest.
struct Tolerances {
  double norm = 1e-12;              // normalization check after construction
  double zero_weight = 1e-300;      // total weight at or below this is a zero norm
  double variance_clamp_rel = 1e-12;  // clamp |negative variance| < rel * second
  double eps_orth = 1e-10;          // |S(t)| threshold for orthogonality
  int oversample = 16;              // grid points per fastest |S| period
  double horizon_multiplier = 50.0;  // default horizon in units of the MT bound
  double refine_width_rel = 1e-13;  // bracket refinement width, relative to horizon
  double occupied_weight = 1e-12;   // probability below this does not count as occupied
  double saturation = 1e-9;         // probability / energy match for intelligent states
  double union_margin_rel = 1e-9;   // endpoint exclusion margin for alpha sampling
  double minorant_min = -1e-9;      // certified slack below this is a violation
};

}  // namespace qsl
