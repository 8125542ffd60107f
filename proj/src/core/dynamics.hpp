#pragma once

#include <complex>
#include <utility>

#include "core/spectral_state.hpp"
#include "core/tolerances.hpp"

namespace qsl {

enum class OrthoStatus {
  found,
  not_found_within_horizon,
};

struct OrthoOptions {
  double horizon = 0.0;    // <= 0 selects 50x the MT bound
  double eps_orth = 1e-10;
  int oversample = 16;
};

/// Outcome of the first-orthogonalization search.
///
/// found           => residual <= eps_orth and t0 in (0, horizon].
/// not found       => min_abs_survival > eps_orth; argmin_time is where the
///                    scan got closest. Almost-periodic survival amplitudes
///                    of generic states may never vanish; that outcome is
///                    reported, not extrapolated away.
struct OrthogonalizationResult {
  OrthoStatus status = OrthoStatus::not_found_within_horizon;
  double t0 = 0.0;  // NaN unless found
  double min_abs_survival = 1.0;
  double argmin_time = 0.0;
  double horizon = 0.0;
  double residual = 1.0;

  bool found() const { return status == OrthoStatus::found; }
};

/// Survival amplitude S(t) = sum_n p_n exp(-i E_n t / hbar).
std::complex<double> survival_amplitude(const SpectralView& state, double t);
inline std::complex<double> survival_amplitude(const DiscreteSpectralState& s, double t) {
  return survival_amplitude(s.view(), t);
}
inline std::complex<double> survival_amplitude(const QuadratureSpectralState& s, double t) {
  return survival_amplitude(s.view(), t);
}

/// (<cos(Ht/hbar)>, <sin(Ht/hbar)>) = (Re S, -Im S); both vanish exactly at
/// an orthogonalization time.
std::pair<double, double> cos_sin_averages(const SpectralView& state, double t);

/// Locate the earliest t in (0, horizon] with |S(t)| <= eps_orth.
///
/// Scans |S| on a grid with step 2*pi*hbar / ((E_max - E_min) * oversample),
/// brackets every local minimum and refines it by golden section to width
/// refine_width_rel * horizon, then accepts the earliest refined minimum
/// below the threshold. States with all weight on one energy never
/// orthogonalize and raise zero_dispersion.
OrthogonalizationResult orthogonalization_time(const SpectralView& state,
                                               const OrthoOptions& opts = {},
                                               const Tolerances& tol = {});
inline OrthogonalizationResult orthogonalization_time(
    const DiscreteSpectralState& s, const OrthoOptions& opts = {},
    const Tolerances& tol = {}) {
  return orthogonalization_time(s.view(), opts, tol);
}
inline OrthogonalizationResult orthogonalization_time(
    const QuadratureSpectralState& s, const OrthoOptions& opts = {},
    const Tolerances& tol = {}) {
  return orthogonalization_time(s.view(), opts, tol);
}

}  // namespace qsl
