#include "core/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace qsl {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    fail(ErrorCode::invalid_argument, "quadrature order must be >= 1");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n, symmetric pairs found from the upper half.
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[k] = -x;
    rule.weights[k] = w;
    rule.nodes[n - 1 - k] = x;
    rule.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureSpectralState uniform_quadrature(double hbar, double energy_lo,
                                           double energy_hi, int nodes) {
  if (!(energy_lo < energy_hi)) {
    fail(ErrorCode::invalid_argument, "uniform density needs energy_lo < energy_hi");
  }
  GaussLegendreRule rule = gauss_legendre(nodes);
  std::vector<Node> mapped(rule.nodes.size());
  const double mid = 0.5 * (energy_lo + energy_hi);
  const double halfwidth = 0.5 * (energy_hi - energy_lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    mapped[i].energy = mid + halfwidth * rule.nodes[i];
    mapped[i].weight = 0.5 * rule.weights[i];
  }
  return QuadratureSpectralState(hbar, std::move(mapped));
}

}  // namespace qsl
