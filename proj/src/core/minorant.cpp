#include "core/minorant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/minimize.hpp"

namespace qsl {

namespace {

constexpr double pi = std::numbers::pi;

double poly_eval(const std::array<double, 3>& c, double x) {
  return (c[2] * x + c[1]) * x + c[0];
}

/// Minimum of f(x) - A cos(x + phi) over [lo, hi]: uniform grid plus golden
/// refinement of every bracketed local minimum and both endpoints.
double min_gap_on(const std::array<double, 3>& c, double amplitude, double phase,
                  double lo, double hi, long points) {
  auto gap = [&](double x) {
    return poly_eval(c, x) - amplitude * std::cos(x + phase);
  };
  const double step = (hi - lo) / static_cast<double>(points - 1);
  double prev2 = gap(lo);
  double prev1 = gap(lo + step);
  double best = std::min(prev2, prev1);
  const double tol_x = std::max(1e-11, (hi - lo) * 1e-13);
  for (long i = 2; i < points; ++i) {
    const double cur = gap(lo + i * step);
    best = std::min(best, cur);
    if (prev1 <= prev2 && prev1 <= cur) {
      const ScalarMin refined =
          golden_section_min(gap, lo + (i - 2) * step, lo + i * step, tol_x);
      best = std::min(best, refined.value);
    }
    prev2 = prev1;
    prev1 = cur;
  }
  return best;
}

/// Maximum of psi over [lo, hi] by grid plus refinement.
double max_on(const std::function<double(double)>& psi, double lo, double hi,
              int points = 256) {
  const double step = (hi - lo) / static_cast<double>(points - 1);
  std::vector<double> values(points);
  for (int i = 0; i < points; ++i) values[i] = psi(lo + i * step);
  double best = std::max(values.front(), values.back());
  for (int i = 1; i + 1 < points; ++i) {
    best = std::max(best, values[i]);
    if (values[i] >= values[i - 1] && values[i] >= values[i + 1]) {
      const ScalarMin refined =
          golden_section_max(psi, lo + (i - 1) * step, lo + (i + 1) * step, 1e-11);
      best = std::max(best, refined.value);
    }
  }
  return best;
}

/// Minimal h such that (x + w)^2 + h >= A cos(x + phi) on the domain.
/// Outside the returned scan window the envelope |A| - (x+w)^2 already sits
/// below the attained maximum, so the window contains the argmax.
double quad_lift(double w, double amplitude, double phase, bool half_line) {
  const double abs_a = std::abs(amplitude);
  auto psi = [&](double x) {
    return amplitude * std::cos(x + phase) - (x + w) * (x + w);
  };
  double lo, hi;
  if (half_line) {
    lo = 0.0;
    hi = -w + std::sqrt(2.0 * abs_a + w * w) + 1.0;
  } else {
    const double radius = std::sqrt(2.0 * abs_a) + 1.0;
    lo = -w - radius;
    hi = -w + radius;
  }
  return max_on(psi, lo, hi);
}

/// Minimal b such that x + b >= A cos(x + phi) on x >= 0.
double linear_lift(double amplitude, double phase) {
  const double abs_a = std::abs(amplitude);
  auto psi = [&](double x) { return amplitude * std::cos(x + phase) - x; };
  return max_on(psi, 0.0, 2.0 * abs_a + 1.0);
}

using Vec = std::vector<double>;

/// Deterministic Nelder-Mead; minimizes f starting from x0 with per-axis
/// initial steps. Returns the best point found.
Vec nelder_mead(const std::function<double(const Vec&)>& f, const Vec& x0,
                const Vec& steps, int max_iter = 600) {
  const std::size_t n = x0.size();
  struct Pt {
    Vec x;
    double value;
  };
  std::vector<Pt> simplex;
  simplex.push_back({x0, f(x0)});
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = x0;
    x[i] += steps[i];
    simplex.push_back({x, f(x)});
  }
  auto order = [&simplex]() {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Pt& a, const Pt& b) { return a.value < b.value; });
  };
  order();
  for (int iter = 0; iter < max_iter; ++iter) {
    double spread = 0.0;
    double size = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      spread = std::max(spread, std::abs(simplex[i].value - simplex[0].value));
      for (std::size_t j = 0; j < n; ++j) {
        size = std::max(size, std::abs(simplex[i].x[j] - simplex[0].x[j]));
      }
    }
    if (spread < 1e-13 && size < 1e-11) break;

    Vec centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
    }
    for (double& v : centroid) v /= static_cast<double>(n);

    auto along = [&](double t) {
      Vec x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = centroid[j] + t * (centroid[j] - simplex[n].x[j]);
      }
      return x;
    };
    const Vec xr = along(1.0);
    const double fr = f(xr);
    if (fr < simplex[0].value) {
      const Vec xe = along(2.0);
      const double fe = f(xe);
      simplex[n] = fe < fr ? Pt{xe, fe} : Pt{xr, fr};
    } else if (fr < simplex[n - 1].value) {
      simplex[n] = {xr, fr};
    } else {
      const bool outside = fr < simplex[n].value;
      const Vec xc = along(outside ? 0.5 : -0.5);
      const double fc = f(xc);
      if (fc < std::min(fr, simplex[n].value)) {
        simplex[n] = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            simplex[i].x[j] = 0.5 * (simplex[i].x[j] + simplex[0].x[j]);
          }
          simplex[i].value = f(simplex[i].x);
        }
      }
    }
    order();
  }
  return simplex[0].x;
}

/// Compass polish along a fixed direction set with shrinking steps. The
/// diagonal directions matter: the optimum sits on a ridge where the
/// quadratic's center and the cosine phase move together.
Vec compass_polish(const std::function<double(const Vec&)>& f, Vec x,
                   const std::vector<Vec>& directions, double step = 0.2,
                   double step_min = 1e-10, int max_eval = 20000) {
  double fx = f(x);
  int evals = 0;
  while (step > step_min && evals < max_eval) {
    bool improved = false;
    for (const Vec& d : directions) {
      for (double sign : {1.0, -1.0}) {
        Vec cand = x;
        for (std::size_t j = 0; j < x.size(); ++j) cand[j] += sign * step * d[j];
        const double fc = f(cand);
        ++evals;
        if (fc < fx) {
          x = std::move(cand);
          fx = fc;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) step *= 0.5;
  }
  return x;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

MinorantCertificate certify(MinorantCertificate cand, const Tolerances& tol) {
  for (double v : cand.coeffs) {
    if (!std::isfinite(v)) fail(ErrorCode::invalid_argument, "coefficients must be finite");
  }
  if (!std::isfinite(cand.amplitude) || !std::isfinite(cand.phase)) {
    fail(ErrorCode::invalid_argument, "amplitude and phase must be finite");
  }
  if (cand.grid.points < 100000) {
    fail(ErrorCode::invalid_argument, "certification grid needs at least 1e5 points");
  }
  if (!(cand.grid.span >= 4.0 * pi)) {
    fail(ErrorCode::invalid_argument, "certification span must cover at least 4 pi");
  }
  if (cand.family == MinorantFamily::linear && cand.coeffs[2] != 0.0) {
    fail(ErrorCode::invalid_argument, "linear family cannot carry a quadratic term");
  }

  const double c0 = cand.coeffs[0];
  const double c1 = cand.coeffs[1];
  const double c2 = cand.coeffs[2];
  const double abs_a = std::abs(cand.amplitude);
  const bool half = cand.domain == MinorantDomain::half_line_nonneg;

  // Region where f(x) < |A| is possible; outside it f >= |A| >= A cos holds
  // with no grid at all.
  bool has_neg_region = false;
  double neg_lo = 0.0, neg_hi = 0.0;
  if (c2 > 0.0) {
    const double disc = c1 * c1 - 4.0 * c2 * (c0 - abs_a);
    if (disc > 0.0) {
      const double root = std::sqrt(disc);
      neg_lo = (-c1 - root) / (2.0 * c2);
      neg_hi = (-c1 + root) / (2.0 * c2);
      has_neg_region = true;
    }
  } else if (c2 < 0.0) {
    fail(ErrorCode::tail_uncertifiable,
         "a downward quadratic falls below the cosine for large |x|");
  } else if (c1 == 0.0) {
    // Constant minorant: the cosine attains +-|A| on any tail, so the slack
    // is exactly c0 - |A|.
    cand.certified_slack = c0 - abs_a;
    if (cand.certified_slack < tol.minorant_min) {
      fail(ErrorCode::slack_violation, "constant sits below the cosine amplitude");
    }
    return cand;
  } else {
    if (!half) {
      fail(ErrorCode::tail_uncertifiable,
           "a line cannot dominate a cosine on both ends of the real line");
    }
    if (c1 < 0.0) {
      fail(ErrorCode::tail_uncertifiable,
           "a falling line cannot dominate the cosine for large x");
    }
    neg_lo = 0.0;
    neg_hi = (abs_a - c0) / c1;
    has_neg_region = neg_hi > 0.0;
  }

  double lo = -cand.phase - cand.grid.span;
  double hi = -cand.phase + cand.grid.span;
  if (has_neg_region) {
    lo = std::min(lo, neg_lo - 1.0);
    hi = std::max(hi, neg_hi + 1.0);
  }
  if (half) {
    lo = std::max(lo, 0.0);
    hi = std::max(hi, lo + 1.0);
  }
  cand.certified_slack = min_gap_on(cand.coeffs, cand.amplitude, cand.phase, lo,
                                    hi, cand.grid.points);
  if (cand.certified_slack < tol.minorant_min) {
    fail(ErrorCode::slack_violation, "candidate dips below its cosine minorant");
  }
  return cand;
}

TimeBound bound_from_certificate(const MinorantCertificate& cert,
                                 const Moments& m, double hbar,
                                 const Tolerances& tol) {
  if (!std::isfinite(cert.certified_slack) ||
      cert.certified_slack < tol.minorant_min) {
    fail(ErrorCode::validation, "certificate has no valid slack; run certify first");
  }
  if (cert.domain == MinorantDomain::half_line_nonneg) {
    if (!m.min_energy) {
      fail(ErrorCode::domain_mismatch,
           "half-line certificate needs a known lowest energy");
    }
    if (std::abs(*m.min_energy) > 1e-12) {
      fail(ErrorCode::domain_mismatch,
           "half-line certificate needs the spectrum shifted to E0 = 0");
    }
  }

  const double c0 = cert.coeffs[0];
  const double c1 = cert.coeffs[1];
  const double c2 = cert.coeffs[2];
  if (c2 != 0.0) {
    if (!(m.second > 0.0)) {
      fail(ErrorCode::degenerate_spectrum,
           "constraint degenerates when all weight sits at zero energy");
    }
    const double a2 = c2 * m.second / (hbar * hbar);
    const double a1 = c1 * m.mean / hbar;
    const double a0 = c0;
    if (!(a2 > 0.0)) {
      fail(ErrorCode::validation, "averaged quadratic must open upward");
    }
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    if (disc <= 0.0) return IntervalSet{};
    const double root = std::sqrt(disc);
    return IntervalSet::from_intervals(
        {OpenInterval{(-a1 - root) / (2.0 * a2), (-a1 + root) / (2.0 * a2)}});
  }

  const double coef = c1 * m.mean / hbar;
  if (coef > 0.0) {
    return HalfLineBound{std::max(0.0, -c0 * hbar / (c1 * m.mean))};
  }
  if (coef == 0.0) {
    // <f> = c0: negative means no orthogonalization time can exist at all.
    return HalfLineBound{c0 >= 0.0 ? 0.0 : infinite_time};
  }
  fail(ErrorCode::validation, "constraint weakens with time; no usable restriction");
}

double implied_lower_bound(const TimeBound& bound) {
  if (const auto* hl = std::get_if<HalfLineBound>(&bound)) return hl->min_time;
  const auto& set = std::get<IntervalSet>(bound);
  if (set.empty()) return 0.0;
  return std::max(0.0, set.sup());
}

MinorantCertificate optimize_family(MinorantFamily family, MinorantDomain domain,
                                    const Moments& m, double hbar,
                                    const Tolerances& tol) {
  if (family == MinorantFamily::linear && domain == MinorantDomain::full_line) {
    fail(ErrorCode::tail_uncertifiable,
         "a line cannot dominate a cosine on both ends of the real line");
  }
  if (!(m.second > 0.0)) {
    fail(ErrorCode::degenerate_spectrum,
         "constraint degenerates when all weight sits at zero energy");
  }
  const bool half = domain == MinorantDomain::half_line_nonneg;
  if (half) {
    if (!m.min_energy) {
      fail(ErrorCode::domain_mismatch,
           "half-line family needs a known lowest energy");
    }
    if (std::abs(*m.min_energy) > 1e-12) {
      fail(ErrorCode::domain_mismatch,
           "half-line family needs the spectrum shifted to E0 = 0");
    }
  }

  std::function<double(const Vec&)> objective;
  std::vector<Vec> starts;
  std::vector<Vec> directions;

  if (family == MinorantFamily::quadratic) {
    // Params (w, A, phi) for f(x) = (x + w)^2 + h with h lifted to the
    // minimal admissible value, so every visited candidate is tight.
    objective = [&m, hbar, half](const Vec& p) {
      const double w = p[0];
      const double amplitude = p[1];
      const double phase = p[2];
      const double h = quad_lift(w, amplitude, phase, half);
      const double a2 = m.second / (hbar * hbar);
      const double a1 = 2.0 * w * m.mean / hbar;
      const double a0 = w * w + h;
      const double disc = a1 * a1 - 4.0 * a2 * a0;
      if (disc <= 0.0) return 0.0;
      return std::max(0.0, (-a1 + std::sqrt(disc)) / (2.0 * a2));
    };
    const OpenInterval omega = omega_window(m);
    const int restarts = 6;
    for (int k = 0; k < restarts; ++k) {
      const double phi0 =
          omega.lo + omega.width() * (k + 0.5) / static_cast<double>(restarts);
      starts.push_back({phi0, -pi, phi0});
    }
    directions = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                  {std::sqrt(0.5), 0, std::sqrt(0.5)},
                  {std::sqrt(0.5), 0, -std::sqrt(0.5)}};
  } else {
    // Params (A, phi) for f(x) = x + b with b lifted minimally; the bound
    // -b hbar / <H> depends on the parameters only through b.
    objective = [&m, hbar](const Vec& p) {
      const double b = linear_lift(p[0], p[1]);
      const double coef = m.mean / hbar;
      if (coef <= 0.0) return 0.0;
      return std::max(0.0, -b / coef);
    };
    for (double a0 : {1.0, 2.0}) {
      for (int k = 0; k < 8; ++k) {
        starts.push_back({a0, 2.0 * pi * k / 8.0});
      }
    }
    directions = {{1, 0}, {0, 1}, {std::sqrt(0.5), std::sqrt(0.5)},
                  {std::sqrt(0.5), -std::sqrt(0.5)}};
  }

  auto negated = [&objective](const Vec& p) { return -objective(p); };
  Vec best_params;
  double best_value = -std::numeric_limits<double>::infinity();
  for (const Vec& start : starts) {
    Vec steps(start.size(), 0.3);
    Vec x = nelder_mead(negated, start, steps);
    x = compass_polish(negated, std::move(x), directions);
    const double value = objective(x);
    if (value > best_value ||
        (value == best_value && lex_less(x, best_params))) {
      best_value = value;
      best_params = std::move(x);
    }
  }

  MinorantCertificate cert;
  cert.family = family;
  cert.domain = domain;
  cert.grid = GridSpec{4.0 * pi, 200000};
  if (family == MinorantFamily::quadratic) {
    const double w = best_params[0];
    cert.amplitude = best_params[1];
    cert.phase = best_params[2];
    // Tiny positive lift keeps rounding at the tangency from tripping the
    // slack threshold.
    const double h = quad_lift(w, cert.amplitude, cert.phase, half) +
                     1e-12 * (1.0 + std::abs(cert.amplitude));
    cert.coeffs = {w * w + h, 2.0 * w, 1.0};
  } else {
    cert.amplitude = best_params[0];
    cert.phase = best_params[1];
    const double b = linear_lift(cert.amplitude, cert.phase) +
                     1e-12 * (1.0 + std::abs(cert.amplitude));
    cert.coeffs = {b, 1.0, 0.0};
  }
  return certify(std::move(cert), tol);
}

}  // namespace qsl
