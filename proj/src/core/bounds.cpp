#include "core/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/minimize.hpp"

namespace qsl {

namespace {
constexpr double pi = std::numbers::pi;
}

double mt_bound(const Moments& m, double hbar) {
  const double disp = m.dispersion();
  if (disp == 0.0) return infinite_time;
  return pi * hbar / (2.0 * disp);
}

double ml_bound(const Moments& m, double hbar) {
  if (!m.min_energy) {
    fail(ErrorCode::missing_lower_bound,
         "mean-energy bound needs a spectrum bounded from below");
  }
  const double gap = m.mean - *m.min_energy;
  if (gap == 0.0) return infinite_time;
  return pi * hbar / (2.0 * gap);
}

double gamma(double alpha, double x) {
  const double u = x + alpha;
  return u * u - pi * pi / 4.0 + pi * std::cos(u);
}

MinorantScan verify_quadratic_minorant(double alpha, double grid_span,
                                       long grid_points,
                                       const Tolerances& tol) {
  if (!(grid_span >= 2.0 * pi)) {
    fail(ErrorCode::invalid_argument, "grid span must cover at least 2 pi");
  }
  if (grid_points < 10000) {
    fail(ErrorCode::invalid_argument, "grid needs at least 1e4 points");
  }
  const double lo = -alpha - grid_span;
  const double hi = -alpha + grid_span;
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  auto g = [alpha](double x) { return gamma(alpha, x); };

  std::vector<double> values(grid_points);
  for (long i = 0; i < grid_points; ++i) values[i] = g(lo + i * step);

  MinorantScan scan;
  scan.min_value = values[0];
  std::vector<ScalarMin> minima;
  for (long i = 1; i < grid_points; ++i) {
    scan.min_value = std::min(scan.min_value, values[i]);
    if (i == grid_points - 1) break;
    if (values[i] <= values[i - 1] && values[i] <= values[i + 1]) {
      minima.push_back(
          golden_section_min(g, lo + (i - 1) * step, lo + (i + 1) * step, 1e-11));
    }
  }
  for (const ScalarMin& sm : minima) scan.min_value = std::min(scan.min_value, sm.value);
  for (const ScalarMin& sm : minima) {
    if (sm.value > scan.min_value + 1e-10) continue;
    bool duplicate = false;
    for (double x : scan.argmins) duplicate = duplicate || std::abs(x - sm.x) < 1e-6;
    if (!duplicate) scan.argmins.push_back(sm.x);
  }
  std::sort(scan.argmins.begin(), scan.argmins.end());

  if (scan.min_value < tol.minorant_min) {
    fail(ErrorCode::minorant_violation,
         "comparison function dipped below zero; implementation bug");
  }
  return scan;
}

QuadraticConstraint quadratic_constraint(const Moments& m, double alpha,
                                         double hbar) {
  if (!(m.second > 0.0)) {
    fail(ErrorCode::degenerate_spectrum,
         "constraint degenerates when all weight sits at zero energy");
  }
  return QuadraticConstraint{m.second / (hbar * hbar), 2.0 * alpha * m.mean / hbar,
                             alpha * alpha - pi * pi / 4.0};
}

std::optional<OpenInterval> excluded_interval(const Moments& m, double alpha,
                                              double hbar) {
  if (!(m.second > 0.0)) {
    fail(ErrorCode::degenerate_spectrum,
         "constraint degenerates when all weight sits at zero energy");
  }
  const double disc = pi * pi * m.second - 4.0 * alpha * alpha * m.variance;
  if (disc <= 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  const double denom = 2.0 * m.second;
  return OpenInterval{hbar * (-2.0 * alpha * m.mean - root) / denom,
                      hbar * (-2.0 * alpha * m.mean + root) / denom};
}

OpenInterval omega_window(const Moments& m) {
  const double disp = m.dispersion();
  if (disp == 0.0) {
    fail(ErrorCode::zero_dispersion, "window is undefined at zero dispersion");
  }
  const double half = pi * std::sqrt(m.second) / (2.0 * disp);
  return OpenInterval{-half, half};
}

IntervalSet union_excluded(const Moments& m, double hbar, long n_alpha_samples,
                           const Tolerances& tol) {
  if (n_alpha_samples < 2) {
    fail(ErrorCode::invalid_argument, "need at least 2 alpha samples");
  }
  const OpenInterval omega = omega_window(m);
  const double margin = tol.union_margin_rel * omega.width();
  const double lo = omega.lo + margin;
  const double hi = omega.hi - margin;
  const double step = (hi - lo) / static_cast<double>(n_alpha_samples - 1);

  std::vector<OpenInterval> pieces;
  pieces.reserve(static_cast<std::size_t>(n_alpha_samples));
  for (long i = 0; i < n_alpha_samples; ++i) {
    const double alpha = lo + i * step;
    if (auto iv = excluded_interval(m, alpha, hbar)) pieces.push_back(*iv);
  }
  return IntervalSet::from_intervals(std::move(pieces));
}

double mean_gamma(const SpectralView& state, double t, double alpha) {
  const double rate = t / state.hbar;
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    acc += state.weights[i] * gamma(alpha, state.energies[i] * rate);
  }
  return acc;
}

SaturationDetails saturation_check(const DiscreteSpectralState& state,
                                   const Tolerances& tol) {
  const Moments m = moments(state, tol);
  const double disp = m.dispersion();
  if (disp == 0.0) {
    fail(ErrorCode::zero_dispersion,
         "saturation is undefined at zero dispersion");
  }

  SaturationDetails details;
  std::vector<std::size_t> occupied;
  for (std::size_t i = 0; i < state.probabilities().size(); ++i) {
    if (state.probabilities()[i] > tol.occupied_weight) occupied.push_back(i);
  }
  details.occupied_levels = occupied.size();
  if (occupied.size() != 2) {
    details.prob_deviation = std::numeric_limits<double>::quiet_NaN();
    details.energy_deviation = std::numeric_limits<double>::quiet_NaN();
    return details;
  }

  const double p_lo = state.probabilities()[occupied[0]];
  const double p_hi = state.probabilities()[occupied[1]];
  const double e_lo = state.energies()[occupied[0]];
  const double e_hi = state.energies()[occupied[1]];
  details.prob_deviation = std::max(std::abs(p_lo - 0.5), std::abs(p_hi - 0.5));
  details.energy_deviation = std::max(std::abs(e_lo - (m.mean - disp)),
                                      std::abs(e_hi - (m.mean + disp)));
  details.is_intelligent = details.prob_deviation <= tol.saturation &&
                           details.energy_deviation <= tol.saturation;
  return details;
}

}  // namespace qsl
