#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "core/intervals.hpp"
#include "core/spectral_state.hpp"
#include "core/tolerances.hpp"

namespace qsl {

/// Distinguished value for bounds that carry no information (zero dispersion,
/// lowest-energy eigenstate). A value so pipelines can rank bounds uniformly.
inline constexpr double infinite_time = std::numeric_limits<double>::infinity();

/// Dispersion bound pi*hbar / (2 dE); infinite_time when dE = 0.
double mt_bound(const Moments& m, double hbar);

/// Mean-energy bound pi*hbar / (2 (E - E0)); infinite_time for the ground
/// eigenstate. Requires a known lowest energy.
double ml_bound(const Moments& m, double hbar);

/// Comparison function (x + alpha)^2 - pi^2/4 + pi*cos(x + alpha).
/// Nonnegative everywhere, zero exactly at x = -alpha +/- pi/2.
double gamma(double alpha, double x);

struct MinorantScan {
  double min_value = 0.0;
  std::vector<double> argmins;  // refined global minimizers, ascending
};

/// Certify gamma_alpha >= 0 numerically on [-alpha - span, -alpha + span]:
/// uniform grid, every local minimum refined. Outside |x + alpha| >= pi no
/// grid is needed: (x+alpha)^2 - pi^2/4 >= 3 pi^2/4 > pi >= -pi cos(x+alpha).
/// Raises minorant_violation if the refined minimum drops below -1e-9.
MinorantScan verify_quadratic_minorant(double alpha, double grid_span,
                                       long grid_points,
                                       const Tolerances& tol = {});

/// a2 t^2 + a1 t + a0 >= 0 with a2 > 0; the restriction the quadratic
/// minorant places on any orthogonalization time.
struct QuadraticConstraint {
  double a2 = 0.0;  // 1/time^2
  double a1 = 0.0;  // 1/time
  double a0 = 0.0;  // dimensionless

  double eval(double t) const { return (a2 * t + a1) * t + a0; }
};

/// Coefficients (<H^2>/hbar^2, 2 alpha <H>/hbar, alpha^2 - pi^2/4).
QuadraticConstraint quadratic_constraint(const Moments& m, double alpha,
                                         double hbar);

/// Open interval of times excluded by the constraint at this alpha, i.e.
/// hbar(-2 alpha <H> -+ sqrt(pi^2 <H^2> - 4 alpha^2 dE^2)) / (2 <H^2>).
/// Empty (nullopt) when the discriminant is <= 0; the degenerate point of a
/// zero discriminant carries no open interval.
std::optional<OpenInterval> excluded_interval(const Moments& m, double alpha,
                                              double hbar);

/// Window of alpha values with a nonempty excluded interval:
/// (-pi sqrt(<H^2>) / (2 dE), +pi sqrt(<H^2>) / (2 dE)).
OpenInterval omega_window(const Moments& m);

/// Union of excluded intervals over alpha sampled uniformly across the
/// window (endpoints excluded by a relative margin). As samples grow the
/// union converges to the single interval (-pi hbar/(2 dE), +pi hbar/(2 dE)).
IntervalSet union_excluded(const Moments& m, double hbar, long n_alpha_samples,
                           const Tolerances& tol = {});

/// <gamma_alpha(Ht/hbar)> over the state's energy distribution.
double mean_gamma(const SpectralView& state, double t, double alpha);

struct SaturationDetails {
  bool is_intelligent = false;
  std::size_t occupied_levels = 0;
  double prob_deviation = 0.0;    // max |p - 1/2| over the two lines
  double energy_deviation = 0.0;  // max |E - (mean -+ dE)|
};

/// True iff the state has exactly two occupied levels, each with weight 1/2,
/// sitting at mean +/- dE. Such states, and only such states, reach the
/// dispersion bound exactly.
SaturationDetails saturation_check(const DiscreteSpectralState& state,
                                   const Tolerances& tol = {});

}  // namespace qsl
