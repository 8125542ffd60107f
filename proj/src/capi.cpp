#include "qsl.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>
#include <variant>
#include <vector>

#include "core/bounds.hpp"
#include "core/dynamics.hpp"
#include "core/errors.hpp"
#include "core/intervals.hpp"
#include "core/minorant.hpp"
#include "core/quadrature.hpp"
#include "core/spectral_state.hpp"

using qsl::DiscreteSpectralState;
using qsl::QuadratureSpectralState;

struct qsl_state {
  std::variant<DiscreteSpectralState, QuadratureSpectralState> value;

  qsl::SpectralView view() const {
    return std::visit([](const auto& s) { return s.view(); }, value);
  }
  double hbar() const {
    return std::visit([](const auto& s) { return s.hbar(); }, value);
  }
  double norm_correction() const {
    return std::visit([](const auto& s) { return s.norm_correction(); }, value);
  }
};

struct qsl_interval_set {
  qsl::IntervalSet value;
};

namespace {

thread_local std::string g_last_error;

qsl_status map_code(qsl::ErrorCode code) {
  switch (code) {
    case qsl::ErrorCode::invalid_argument:
      return QSL_ERR_INVALID_ARGUMENT;
    case qsl::ErrorCode::zero_norm:
      return QSL_ERR_ZERO_NORM;
    case qsl::ErrorCode::zero_dispersion:
      return QSL_ERR_ZERO_DISPERSION;
    case qsl::ErrorCode::nonpositive_dispersion:
      return QSL_ERR_NONPOSITIVE_DISPERSION;
    case qsl::ErrorCode::missing_lower_bound:
      return QSL_ERR_MISSING_LOWER_BOUND;
    case qsl::ErrorCode::degenerate_spectrum:
      return QSL_ERR_DEGENERATE_SPECTRUM;
    case qsl::ErrorCode::minorant_violation:
      return QSL_ERR_MINORANT_VIOLATION;
    case qsl::ErrorCode::tail_uncertifiable:
      return QSL_ERR_TAIL_UNCERTIFIABLE;
    case qsl::ErrorCode::slack_violation:
      return QSL_ERR_SLACK_VIOLATION;
    case qsl::ErrorCode::domain_mismatch:
      return QSL_ERR_DOMAIN_MISMATCH;
    case qsl::ErrorCode::validation:
      return QSL_ERR_VALIDATION;
  }
  return QSL_ERR_INTERNAL;
}

template <class F>
qsl_status wrap(F&& fn) noexcept {
  try {
    fn();
    return QSL_OK;
  } catch (const qsl::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QSL_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QSL_ERR_INTERNAL;
  }
}

qsl_status require(bool ok, const char* message) {
  if (ok) return QSL_OK;
  g_last_error = message;
  return QSL_ERR_INVALID_ARGUMENT;
}

qsl_moments to_c(const qsl::Moments& m) {
  qsl_moments out{};
  out.mean = m.mean;
  out.second = m.second;
  out.variance = m.variance;
  out.has_min_energy = m.min_energy.has_value() ? 1 : 0;
  out.min_energy = m.min_energy.value_or(0.0);
  out.variance_clamped = m.variance_clamped ? 1 : 0;
  return out;
}

qsl::Moments from_c(const qsl_moments& m) {
  qsl::Moments out;
  out.mean = m.mean;
  out.second = m.second;
  out.variance = m.variance;
  if (m.has_min_energy) out.min_energy = m.min_energy;
  out.variance_clamped = m.variance_clamped != 0;
  return out;
}

qsl::MinorantCertificate from_c(const qsl_certificate& c) {
  qsl::MinorantCertificate cert;
  cert.family = c.family == QSL_FAMILY_LINEAR ? qsl::MinorantFamily::linear
                                              : qsl::MinorantFamily::quadratic;
  cert.coeffs = {c.coeffs[0], c.coeffs[1], c.coeffs[2]};
  cert.amplitude = c.amplitude;
  cert.phase = c.phase;
  cert.domain = c.domain == QSL_DOMAIN_FULL_LINE
                    ? qsl::MinorantDomain::full_line
                    : qsl::MinorantDomain::half_line_nonneg;
  cert.certified_slack = c.certified_slack;
  cert.grid = qsl::GridSpec{c.grid_span, c.grid_points};
  return cert;
}

void to_c(const qsl::MinorantCertificate& cert, qsl_certificate* out) {
  out->family = cert.family == qsl::MinorantFamily::linear ? QSL_FAMILY_LINEAR
                                                           : QSL_FAMILY_QUADRATIC;
  out->coeffs[0] = cert.coeffs[0];
  out->coeffs[1] = cert.coeffs[1];
  out->coeffs[2] = cert.coeffs[2];
  out->amplitude = cert.amplitude;
  out->phase = cert.phase;
  out->domain = cert.domain == qsl::MinorantDomain::full_line
                    ? QSL_DOMAIN_FULL_LINE
                    : QSL_DOMAIN_HALF_LINE_NONNEG;
  out->certified_slack = cert.certified_slack;
  out->grid_span = cert.grid.span;
  out->grid_points = cert.grid.points;
}

}  // namespace

extern "C" {

const char* qsl_version(void) { return "0.1.0"; }

const char* qsl_status_name(qsl_status status) {
  switch (status) {
    case QSL_OK: return "ok";
    case QSL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case QSL_ERR_ZERO_NORM: return "zero_norm";
    case QSL_ERR_ZERO_DISPERSION: return "zero_dispersion";
    case QSL_ERR_NONPOSITIVE_DISPERSION: return "nonpositive_dispersion";
    case QSL_ERR_MISSING_LOWER_BOUND: return "missing_lower_bound";
    case QSL_ERR_DEGENERATE_SPECTRUM: return "degenerate_spectrum";
    case QSL_ERR_MINORANT_VIOLATION: return "minorant_violation";
    case QSL_ERR_TAIL_UNCERTIFIABLE: return "tail_uncertifiable";
    case QSL_ERR_SLACK_VIOLATION: return "slack_violation";
    case QSL_ERR_DOMAIN_MISMATCH: return "domain_mismatch";
    case QSL_ERR_VALIDATION: return "validation";
    case QSL_ERR_NOMEM: return "nomem";
    case QSL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* qsl_last_error_message(void) { return g_last_error.c_str(); }

qsl_status qsl_state_create_discrete(double hbar, const double* energies,
                                     const double* amp_re, const double* amp_im,
                                     size_t count, qsl_state** out) {
  if (auto st = require(energies && amp_re && out && count > 0,
                        "energies, amp_re and out must be non-null, count > 0"))
    return st;
  return wrap([&] {
    std::vector<qsl::Level> levels(count);
    for (size_t i = 0; i < count; ++i) {
      levels[i].energy = energies[i];
      levels[i].amplitude = {amp_re[i], amp_im ? amp_im[i] : 0.0};
    }
    *out = new qsl_state{DiscreteSpectralState(hbar, std::move(levels))};
  });
}

qsl_status qsl_state_create_quadrature(double hbar, const double* energies,
                                       const double* weights, size_t count,
                                       qsl_state** out) {
  if (auto st = require(energies && weights && out && count > 0,
                        "energies, weights and out must be non-null, count > 0"))
    return st;
  return wrap([&] {
    std::vector<qsl::Node> nodes(count);
    for (size_t i = 0; i < count; ++i) nodes[i] = {energies[i], weights[i]};
    *out = new qsl_state{QuadratureSpectralState(hbar, std::move(nodes))};
  });
}

qsl_status qsl_state_create_intelligent(double hbar, double mean, double delta_e,
                                        double phase_lo, double phase_hi,
                                        qsl_state** out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return wrap([&] {
    *out = new qsl_state{
        qsl::construct_intelligent(hbar, mean, delta_e, phase_lo, phase_hi)};
  });
}

qsl_status qsl_state_create_uniform_quadrature(double hbar, double energy_lo,
                                               double energy_hi, size_t nodes,
                                               qsl_state** out) {
  if (auto st = require(out != nullptr && nodes > 0, "out must be non-null"))
    return st;
  return wrap([&] {
    *out = new qsl_state{
        qsl::uniform_quadrature(hbar, energy_lo, energy_hi, static_cast<int>(nodes))};
  });
}

void qsl_state_free(qsl_state* state) { delete state; }

qsl_status qsl_state_get_kind(const qsl_state* state, qsl_state_kind* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  *out = std::holds_alternative<DiscreteSpectralState>(state->value)
             ? QSL_STATE_DISCRETE
             : QSL_STATE_QUADRATURE;
  return QSL_OK;
}

qsl_status qsl_state_hbar(const qsl_state* state, double* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  *out = state->hbar();
  return QSL_OK;
}

qsl_status qsl_state_size(const qsl_state* state, size_t* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  *out = state->view().size();
  return QSL_OK;
}

qsl_status qsl_state_spectrum(const qsl_state* state, double* energies,
                              double* weights, size_t capacity) {
  if (auto st = require(state && energies && weights, "arguments must be non-null"))
    return st;
  const qsl::SpectralView v = state->view();
  if (auto st = require(capacity >= v.size(), "capacity below state size"))
    return st;
  for (size_t i = 0; i < v.size(); ++i) {
    energies[i] = v.energies[i];
    weights[i] = v.weights[i];
  }
  return QSL_OK;
}

qsl_status qsl_state_norm_correction(const qsl_state* state, double* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  *out = state->norm_correction();
  return QSL_OK;
}

qsl_status qsl_state_normalize(const qsl_state* state, qsl_state** out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  return wrap([&] {
    *out = new qsl_state{std::visit(
        [](const auto& s) {
          return std::variant<DiscreteSpectralState, QuadratureSpectralState>(
              qsl::normalize(s));
        },
        state->value)};
  });
}

qsl_status qsl_state_shift_energy(const qsl_state* state, double delta,
                                  qsl_state** out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  return wrap([&] {
    *out = new qsl_state{std::visit(
        [delta](const auto& s) {
          return std::variant<DiscreteSpectralState, QuadratureSpectralState>(
              qsl::shift_energy(s, delta));
        },
        state->value)};
  });
}

qsl_status qsl_state_moments(const qsl_state* state, qsl_moments* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  return wrap([&] { *out = to_c(qsl::moments(state->view())); });
}

qsl_status qsl_survival_amplitude(const qsl_state* state, double t, double* re,
                                  double* im) {
  if (auto st = require(state && re && im, "arguments must be non-null")) return st;
  return wrap([&] {
    const std::complex<double> s = qsl::survival_amplitude(state->view(), t);
    *re = s.real();
    *im = s.imag();
  });
}

qsl_status qsl_cos_sin_averages(const qsl_state* state, double t, double* cos_avg,
                                double* sin_avg) {
  if (auto st = require(state && cos_avg && sin_avg, "arguments must be non-null"))
    return st;
  return wrap([&] {
    const auto [c, s] = qsl::cos_sin_averages(state->view(), t);
    *cos_avg = c;
    *sin_avg = s;
  });
}

void qsl_orth_options_default(qsl_orth_options* opts) {
  if (!opts) return;
  opts->horizon = 0.0;
  opts->eps_orth = 1e-10;
  opts->oversample = 16;
}

qsl_status qsl_orthogonalization_time(const qsl_state* state,
                                      const qsl_orth_options* opts,
                                      qsl_orth_result* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  return wrap([&] {
    qsl::OrthoOptions o;
    if (opts) {
      o.horizon = opts->horizon;
      o.eps_orth = opts->eps_orth;
      o.oversample = opts->oversample;
    }
    const qsl::OrthogonalizationResult r =
        qsl::orthogonalization_time(state->view(), o);
    out->found = r.found() ? 1 : 0;
    out->t0 = r.t0;
    out->min_abs_survival = r.min_abs_survival;
    out->argmin_time = r.argmin_time;
    out->horizon = r.horizon;
    out->residual = r.residual;
  });
}

qsl_status qsl_mt_bound(const qsl_moments* m, double hbar, double* out) {
  if (auto st = require(m && out, "moments and out must be non-null")) return st;
  return wrap([&] { *out = qsl::mt_bound(from_c(*m), hbar); });
}

qsl_status qsl_ml_bound(const qsl_moments* m, double hbar, double* out) {
  if (auto st = require(m && out, "moments and out must be non-null")) return st;
  return wrap([&] { *out = qsl::ml_bound(from_c(*m), hbar); });
}

double qsl_gamma(double alpha, double x) { return qsl::gamma(alpha, x); }

qsl_status qsl_verify_quadratic_minorant(double alpha, double grid_span,
                                         int64_t grid_points,
                                         qsl_minorant_scan* out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return wrap([&] {
    const qsl::MinorantScan scan = qsl::verify_quadratic_minorant(
        alpha, grid_span, static_cast<long>(grid_points));
    out->min_value = scan.min_value;
    out->argmin_lo = scan.argmins.empty() ? 0.0 : scan.argmins.front();
    out->argmin_hi = scan.argmins.empty() ? 0.0 : scan.argmins.back();
  });
}

qsl_status qsl_quadratic_constraint(const qsl_moments* m, double alpha,
                                    double hbar, double coeffs_out[3]) {
  if (auto st = require(m && coeffs_out, "moments and coeffs must be non-null"))
    return st;
  return wrap([&] {
    const qsl::QuadraticConstraint qc =
        qsl::quadratic_constraint(from_c(*m), alpha, hbar);
    coeffs_out[0] = qc.a0;
    coeffs_out[1] = qc.a1;
    coeffs_out[2] = qc.a2;
  });
}

qsl_status qsl_excluded_interval(const qsl_moments* m, double alpha, double hbar,
                                 int* nonempty, qsl_interval* out) {
  if (auto st = require(m && nonempty && out, "arguments must be non-null"))
    return st;
  return wrap([&] {
    const auto iv = qsl::excluded_interval(from_c(*m), alpha, hbar);
    *nonempty = iv.has_value() ? 1 : 0;
    out->lo = iv ? iv->lo : 0.0;
    out->hi = iv ? iv->hi : 0.0;
  });
}

qsl_status qsl_omega_window(const qsl_moments* m, qsl_interval* out) {
  if (auto st = require(m && out, "moments and out must be non-null")) return st;
  return wrap([&] {
    const qsl::OpenInterval w = qsl::omega_window(from_c(*m));
    out->lo = w.lo;
    out->hi = w.hi;
  });
}

qsl_status qsl_union_excluded(const qsl_moments* m, double hbar,
                              int64_t n_alpha_samples, qsl_interval_set** out) {
  if (auto st = require(m && out, "moments and out must be non-null")) return st;
  return wrap([&] {
    *out = new qsl_interval_set{
        qsl::union_excluded(from_c(*m), hbar, static_cast<long>(n_alpha_samples))};
  });
}

size_t qsl_interval_set_size(const qsl_interval_set* set) {
  return set ? set->value.size() : 0;
}

qsl_status qsl_interval_set_get(const qsl_interval_set* set, size_t index,
                                qsl_interval* out) {
  if (auto st = require(set && out, "set and out must be non-null")) return st;
  if (auto st = require(index < set->value.size(), "index out of range")) return st;
  out->lo = set->value.intervals()[index].lo;
  out->hi = set->value.intervals()[index].hi;
  return QSL_OK;
}

void qsl_interval_set_free(qsl_interval_set* set) { delete set; }

qsl_status qsl_mean_gamma(const qsl_state* state, double t, double alpha,
                          double* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  return wrap([&] { *out = qsl::mean_gamma(state->view(), t, alpha); });
}

qsl_status qsl_saturation_check(const qsl_state* state,
                                qsl_saturation_result* out) {
  if (auto st = require(state && out, "state and out must be non-null")) return st;
  return wrap([&] {
    const auto* discrete = std::get_if<DiscreteSpectralState>(&state->value);
    if (!discrete) {
      qsl::fail(qsl::ErrorCode::invalid_argument,
                "saturation check applies to discrete states");
    }
    const qsl::SaturationDetails d = qsl::saturation_check(*discrete);
    out->is_intelligent = d.is_intelligent ? 1 : 0;
    out->occupied_levels = d.occupied_levels;
    out->prob_deviation = d.prob_deviation;
    out->energy_deviation = d.energy_deviation;
  });
}

qsl_status qsl_certify(qsl_certificate* cert) {
  if (auto st = require(cert != nullptr, "cert must be non-null")) return st;
  return wrap([&] { to_c(qsl::certify(from_c(*cert)), cert); });
}

qsl_status qsl_bound_from_certificate(const qsl_certificate* cert,
                                      const qsl_moments* m, double hbar,
                                      qsl_time_bound* out) {
  if (auto st = require(cert && m && out, "arguments must be non-null")) return st;
  return wrap([&] {
    const qsl::TimeBound bound =
        qsl::bound_from_certificate(from_c(*cert), from_c(*m), hbar);
    out->implied_lower_bound = qsl::implied_lower_bound(bound);
    if (const auto* hl = std::get_if<qsl::HalfLineBound>(&bound)) {
      out->is_half_line = 1;
      out->half_line_min = hl->min_time;
      out->excluded = nullptr;
    } else {
      out->is_half_line = 0;
      out->half_line_min = 0.0;
      out->excluded = new qsl_interval_set{std::get<qsl::IntervalSet>(bound)};
    }
  });
}

void qsl_time_bound_clear(qsl_time_bound* bound) {
  if (!bound) return;
  qsl_interval_set_free(bound->excluded);
  bound->excluded = nullptr;
}

qsl_status qsl_optimize_family(int family, int domain, const qsl_moments* m,
                               double hbar, qsl_certificate* out) {
  if (auto st = require(m && out, "moments and out must be non-null")) return st;
  if (auto st = require(family == QSL_FAMILY_LINEAR || family == QSL_FAMILY_QUADRATIC,
                        "unknown minorant family"))
    return st;
  if (auto st = require(
          domain == QSL_DOMAIN_HALF_LINE_NONNEG || domain == QSL_DOMAIN_FULL_LINE,
          "unknown minorant domain"))
    return st;
  return wrap([&] {
    const qsl::MinorantCertificate cert = qsl::optimize_family(
        family == QSL_FAMILY_LINEAR ? qsl::MinorantFamily::linear
                                    : qsl::MinorantFamily::quadratic,
        domain == QSL_DOMAIN_FULL_LINE ? qsl::MinorantDomain::full_line
                                       : qsl::MinorantDomain::half_line_nonneg,
        from_c(*m), hbar);
    to_c(cert, out);
  });
}

}  // extern "C"
