#include "core/spectral_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace qsl {

namespace {

void check_hbar(double hbar) {
  if (!std::isfinite(hbar) || hbar <= 0.0) {
    fail(ErrorCode::validation, "hbar must be finite and positive");
  }
}

}  // namespace

double Moments::dispersion() const { return std::sqrt(variance); }

DiscreteSpectralState::DiscreteSpectralState(double hbar,
                                             std::vector<Level> levels,
                                             const Tolerances& tol)
    : hbar_(hbar) {
  check_hbar(hbar);
  if (levels.empty()) {
    fail(ErrorCode::validation, "state needs at least one level");
  }
  for (const Level& lv : levels) {
    if (!std::isfinite(lv.energy) || !std::isfinite(lv.amplitude.real()) ||
        !std::isfinite(lv.amplitude.imag())) {
      fail(ErrorCode::validation, "levels must have finite energy and amplitude");
    }
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const Level& a, const Level& b) { return a.energy < b.energy; });

  // Merge exactly equal energies by probability weight. Relative phases of
  // merged amplitudes are unobservable, so the merged line keeps phase 0.
  double total = 0.0;
  for (std::size_t i = 0; i < levels.size();) {
    std::size_t j = i + 1;
    double p = std::norm(levels[i].amplitude);
    while (j < levels.size() && levels[j].energy == levels[i].energy) {
      p += std::norm(levels[j].amplitude);
      ++j;
    }
    std::complex<double> amp =
        (j == i + 1) ? levels[i].amplitude : std::complex<double>(std::sqrt(p), 0.0);
    levels_.push_back(Level{levels[i].energy, amp});
    probs_.push_back(p);
    total += p;
    i = j;
  }
  if (!(total > tol.zero_weight)) {
    fail(ErrorCode::zero_norm, "total weight is zero");
  }
  norm_correction_ = total;
  const double amp_scale = 1.0 / std::sqrt(total);
  energies_.reserve(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    levels_[i].amplitude *= amp_scale;
    probs_[i] /= total;
    energies_.push_back(levels_[i].energy);
  }
}

QuadratureSpectralState::QuadratureSpectralState(double hbar,
                                                 std::vector<Node> nodes,
                                                 const Tolerances& tol)
    : hbar_(hbar) {
  check_hbar(hbar);
  if (nodes.empty()) {
    fail(ErrorCode::validation, "quadrature state needs at least one node");
  }
  for (const Node& nd : nodes) {
    if (!std::isfinite(nd.energy) || !std::isfinite(nd.weight)) {
      fail(ErrorCode::validation, "nodes must have finite energy and weight");
    }
    if (nd.weight < 0.0) {
      fail(ErrorCode::validation, "node weights must be nonnegative");
    }
  }
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const Node& a, const Node& b) { return a.energy < b.energy; });

  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size();) {
    std::size_t j = i + 1;
    double w = nodes[i].weight;
    while (j < nodes.size() && nodes[j].energy == nodes[i].energy) {
      w += nodes[j].weight;
      ++j;
    }
    nodes_.push_back(Node{nodes[i].energy, w});
    total += w;
    i = j;
  }
  if (!(total > tol.zero_weight)) {
    fail(ErrorCode::zero_norm, "total weight is zero");
  }
  norm_correction_ = total;
  energies_.reserve(nodes_.size());
  weights_.reserve(nodes_.size());
  for (Node& nd : nodes_) {
    nd.weight /= total;
    energies_.push_back(nd.energy);
    weights_.push_back(nd.weight);
  }
}

Moments moments(const SpectralView& state, const Tolerances& tol) {
  double mean = 0.0;
  double second = 0.0;
  std::optional<double> min_energy;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double e = state.energies[i];
    const double w = state.weights[i];
    mean += w * e;
    second += w * e * e;
    if (w > 0.0 && (!min_energy || e < *min_energy)) min_energy = e;
  }
  Moments m;
  m.mean = mean;
  m.second = second;
  m.variance = second - mean * mean;
  m.min_energy = min_energy;
  if (m.variance < 0.0) {
    // Cancellation can leave a tiny negative residue; anything larger means
    // the inputs were malformed.
    if (-m.variance < tol.variance_clamp_rel *
                          std::max(second, std::numeric_limits<double>::min())) {
      m.variance = 0.0;
      m.variance_clamped = true;
    } else {
      fail(ErrorCode::validation, "variance is negative beyond rounding");
    }
  }
  return m;
}

DiscreteSpectralState normalize(const DiscreteSpectralState& s) {
  return DiscreteSpectralState(
      s.hbar(), std::vector<Level>(s.levels().begin(), s.levels().end()));
}

QuadratureSpectralState normalize(const QuadratureSpectralState& s) {
  return QuadratureSpectralState(
      s.hbar(), std::vector<Node>(s.nodes().begin(), s.nodes().end()));
}

DiscreteSpectralState shift_energy(const DiscreteSpectralState& s, double delta) {
  if (!std::isfinite(delta)) {
    fail(ErrorCode::invalid_argument, "energy shift must be finite");
  }
  std::vector<Level> shifted(s.levels().begin(), s.levels().end());
  for (Level& lv : shifted) lv.energy += delta;
  return DiscreteSpectralState(s.hbar(), std::move(shifted));
}

QuadratureSpectralState shift_energy(const QuadratureSpectralState& s, double delta) {
  if (!std::isfinite(delta)) {
    fail(ErrorCode::invalid_argument, "energy shift must be finite");
  }
  std::vector<Node> shifted(s.nodes().begin(), s.nodes().end());
  for (Node& nd : shifted) nd.energy += delta;
  return QuadratureSpectralState(s.hbar(), std::move(shifted));
}

DiscreteSpectralState construct_intelligent(double hbar, double mean,
                                            double delta_e, double phase_lo,
                                            double phase_hi) {
  if (!std::isfinite(delta_e) || delta_e <= 0.0) {
    fail(ErrorCode::nonpositive_dispersion,
         "intelligent state needs a positive energy dispersion");
  }
  if (!std::isfinite(mean)) {
    fail(ErrorCode::invalid_argument, "mean energy must be finite");
  }
  const double amp = 1.0 / std::sqrt(2.0);
  std::vector<Level> levels{
      Level{mean - delta_e, std::polar(amp, phase_lo)},
      Level{mean + delta_e, std::polar(amp, phase_hi)},
  };
  return DiscreteSpectralState(hbar, std::move(levels));
}

}  // namespace qsl
