#pragma once

#include "core/spectral_state.hpp"

namespace qsl {

/// Gauss-Legendre rule on [-1, 1]; weights sum to 2.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Quadrature state for a uniform energy density on [energy_lo, energy_hi],
/// using Gauss-Legendre nodes mapped onto the support. Other densities are
/// the caller's job: build the nodes explicitly and keep the rule visible.
QuadratureSpectralState uniform_quadrature(double hbar, double energy_lo,
                                           double energy_hi, int nodes);

}  // namespace qsl
