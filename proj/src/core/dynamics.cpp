#include "core/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/errors.hpp"
#include "core/minimize.hpp"

namespace qsl {

std::complex<double> survival_amplitude(const SpectralView& state, double t) {
  const double rate = t / state.hbar;
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < state.size(); ++i) {
    acc += state.weights[i] * std::polar(1.0, -state.energies[i] * rate);
  }
  return acc;
}

std::pair<double, double> cos_sin_averages(const SpectralView& state, double t) {
  const std::complex<double> s = survival_amplitude(state, t);
  return {s.real(), -s.imag()};
}

OrthogonalizationResult orthogonalization_time(const SpectralView& state,
                                               const OrthoOptions& opts,
                                               const Tolerances& tol) {
  double e_min = std::numeric_limits<double>::infinity();
  double e_max = -std::numeric_limits<double>::infinity();
  std::size_t occupied = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state.weights[i] <= 0.0) continue;
    ++occupied;
    e_min = std::min(e_min, state.energies[i]);
    e_max = std::max(e_max, state.energies[i]);
  }
  if (occupied < 2 || e_max <= e_min) {
    fail(ErrorCode::zero_dispersion,
         "all weight sits on one energy; the state never orthogonalizes");
  }

  const Moments m = moments(state, tol);
  const double disp = m.dispersion();
  double horizon = opts.horizon;
  if (!(horizon > 0.0)) {
    horizon = tol.horizon_multiplier * std::numbers::pi * state.hbar / (2.0 * disp);
  }
  if (!std::isfinite(horizon)) {
    fail(ErrorCode::invalid_argument, "scan horizon must be finite");
  }
  if (opts.oversample < 1) {
    fail(ErrorCode::invalid_argument, "oversample must be >= 1");
  }

  const double step =
      2.0 * std::numbers::pi * state.hbar / ((e_max - e_min) * opts.oversample);
  const double n_real = std::ceil(horizon / step);
  if (n_real > 2e8) {
    fail(ErrorCode::invalid_argument,
         "scan grid too large; raise the grid step or lower the horizon");
  }
  const std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(n_real), 8);
  const double dt = horizon / static_cast<double>(n);

  auto abs_s = [&state](double t) { return std::abs(survival_amplitude(state, t)); };

  OrthogonalizationResult result;
  result.horizon = horizon;
  result.t0 = std::numeric_limits<double>::quiet_NaN();

  // Streamed scan: only a three-point window is kept.
  double prev2 = abs_s(0.0);
  double prev1 = abs_s(dt);
  double best = std::min(prev2, prev1);
  double best_t = prev1 < prev2 ? dt : 0.0;
  const double refine_width = tol.refine_width_rel * horizon;
  for (std::size_t i = 2; i <= n; ++i) {
    const double cur = abs_s(i * dt);
    if (cur < best) {
      best = cur;
      best_t = i * dt;
    }
    const bool local_min = prev1 <= prev2 && prev1 <= cur;
    if (!local_min) {
      prev2 = prev1;
      prev1 = cur;
      continue;
    }
    const ScalarMin refined =
        golden_section_min(abs_s, (i - 2) * dt, i * dt, refine_width);
    if (refined.value < best) {
      best = refined.value;
      best_t = refined.x;
    }
    if (refined.value <= opts.eps_orth && refined.x > 0.0) {
      // A zero of |S| with vanishing slope (a double zero) leaves a flat
      // sub-threshold basin; its midpoint locates t0 far more precisely
      // than any point the minimizer picks inside the noise floor.
      auto below = [&](double t) { return abs_s(t) <= opts.eps_orth; };
      auto basin_edge = [&](double start, double dir) {
        double inside = start;
        double step_out = refine_width;
        for (int k = 0; k < 200; ++k) {
          double probe = std::clamp(inside + dir * step_out, 0.0, horizon);
          if (!below(probe)) {
            double lo = inside;
            double hi = probe;
            for (int j = 0; j < 120 && std::abs(hi - lo) > 1e-16 * horizon; ++j) {
              const double mid = 0.5 * (lo + hi);
              (below(mid) ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
          }
          inside = probe;
          if (probe == 0.0 || probe == horizon) return probe;
          step_out *= 2.0;
        }
        return inside;
      };
      double t0 = 0.5 * (basin_edge(refined.x, -1.0) + basin_edge(refined.x, 1.0));
      double residual = abs_s(t0);
      if (!(residual <= opts.eps_orth)) {
        t0 = refined.x;
        residual = refined.value;
      }
      result.status = OrthoStatus::found;
      result.t0 = t0;
      result.residual = residual;
      result.min_abs_survival = std::min(residual, refined.value);
      result.argmin_time = t0;
      return result;
    }
    prev2 = prev1;
    prev1 = cur;
  }

  result.status = OrthoStatus::not_found_within_horizon;
  result.min_abs_survival = best;
  result.argmin_time = best_t;
  result.residual = best;
  return result;
}

}  // namespace qsl
