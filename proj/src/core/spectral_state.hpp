#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "core/tolerances.hpp"

namespace qsl {

/// One spectral line: energy eigenvalue and the initial-state amplitude on it.
struct Level {
  double energy = 0.0;
  std::complex<double> amplitude{0.0, 0.0};
};

/// One node of a finite quadrature rule standing in for a continuous
/// energy distribution.
struct Node {
  double energy = 0.0;
  double weight = 0.0;
};

/// Energy moments of a normalized state.
struct Moments {
  double mean = 0.0;      // <H>
  double second = 0.0;    // <H^2>
  double variance = 0.0;  // <H^2> - <H>^2, tiny negatives clamped to 0
  std::optional<double> min_energy;  // lowest occupied energy, when known
  bool variance_clamped = false;

  double dispersion() const;
};

/// Non-owning (energy, probability) view shared by both representations.
/// Every downstream quantity depends on the state only through this view,
/// which is why amplitude phases never influence results.
struct SpectralView {
  double hbar = 1.0;
  std::span<const double> energies;
  std::span<const double> weights;

  std::size_t size() const { return energies.size(); }
};

/// Initial state over a finite point spectrum: hbar plus (E_n, c_n) lines.
///
/// Construction canonicalizes: levels sorted by ascending energy, exact
/// duplicate energies merged by summing probability weight, amplitudes
/// renormalized so the probabilities sum to 1. The total input weight
/// absorbed by that renormalization is recorded as norm_correction().
class DiscreteSpectralState {
 public:
  DiscreteSpectralState(double hbar, std::vector<Level> levels,
                        const Tolerances& tol = {});

  double hbar() const { return hbar_; }
  std::span<const Level> levels() const { return levels_; }
  std::span<const double> energies() const { return energies_; }
  std::span<const double> probabilities() const { return probs_; }
  double norm_correction() const { return norm_correction_; }

  SpectralView view() const {
    return SpectralView{hbar_, energies_, probs_};
  }

 private:
  double hbar_ = 1.0;
  std::vector<Level> levels_;
  std::vector<double> energies_;
  std::vector<double> probs_;
  double norm_correction_ = 1.0;
};

/// Finite quadrature stand-in for the spectral measure of the Hamiltonian
/// in the initial state: weighted energy nodes, weights >= 0 summing to 1.
/// The second moment is finite by construction, which is all the domain
/// condition asks of these states.
class QuadratureSpectralState {
 public:
  QuadratureSpectralState(double hbar, std::vector<Node> nodes,
                          const Tolerances& tol = {});

  double hbar() const { return hbar_; }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const double> energies() const { return energies_; }
  std::span<const double> weights() const { return weights_; }
  double norm_correction() const { return norm_correction_; }

  SpectralView view() const {
    return SpectralView{hbar_, energies_, weights_};
  }

 private:
  double hbar_ = 1.0;
  std::vector<Node> nodes_;
  std::vector<double> energies_;
  std::vector<double> weights_;
  double norm_correction_ = 1.0;
};

Moments moments(const SpectralView& state, const Tolerances& tol = {});
inline Moments moments(const DiscreteSpectralState& s, const Tolerances& tol = {}) {
  return moments(s.view(), tol);
}
inline Moments moments(const QuadratureSpectralState& s, const Tolerances& tol = {}) {
  return moments(s.view(), tol);
}

/// Rescale so weights sum to 1. Idempotent; relative weights preserved.
DiscreteSpectralState normalize(const DiscreteSpectralState& s);
QuadratureSpectralState normalize(const QuadratureSpectralState& s);

/// Shift every energy by delta. Variance and |S(t)| are unaffected; only a
/// global phase of the survival amplitude changes.
DiscreteSpectralState shift_energy(const DiscreteSpectralState& s, double delta);
QuadratureSpectralState shift_energy(const QuadratureSpectralState& s, double delta);

/// Two-level state at mean +/- delta_e with probability 1/2 each; the unique
/// shape that saturates the dispersion bound. Phases are free parameters and
/// drop out of every observable.
DiscreteSpectralState construct_intelligent(double hbar, double mean,
                                            double delta_e,
                                            double phase_lo = 0.0,
                                            double phase_hi = 0.0);

}  // namespace qsl
