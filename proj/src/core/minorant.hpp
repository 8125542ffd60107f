#pragma once

#include <array>
#include <variant>

#include "core/intervals.hpp"
#include "core/spectral_state.hpp"
#include "core/tolerances.hpp"

namespace qsl {

enum class MinorantFamily { linear, quadratic };

enum class MinorantDomain {
  half_line_nonneg,  // x >= 0; valid only for spectra with E0 = 0 after shift
  full_line,
};

struct GridSpec {
  double span = 0.0;
  long points = 0;
};

/// A cosine-minorant inequality f(x) >= A cos(x + alpha) on a stated domain,
/// plus the numerically certified slack min(f(x) - A cos(x + alpha)).
/// Averaging f(Ht0/hbar) at an orthogonalization time gives <f> >= 0, which
/// is where the time restrictions come from.
struct MinorantCertificate {
  MinorantFamily family = MinorantFamily::quadratic;
  std::array<double, 3> coeffs{0.0, 0.0, 0.0};  // f(x) = c0 + c1 x + c2 x^2
  double amplitude = 0.0;                       // A
  double phase = 0.0;                           // alpha
  MinorantDomain domain = MinorantDomain::full_line;
  double certified_slack = 0.0;  // meaningless until certify() ran
  GridSpec grid{4.0 * 3.141592653589793, 200000};
};

/// Fill certified_slack by grid scan plus refinement over the region where
/// f - A cos can be negative. Tails are certified analytically: wherever
/// f(x) >= |A| the inequality holds outright, and that happens outside a
/// computable bounded region for rising quadratics and half-line lines.
/// Families whose tails cannot dominate a cosine (any sloped line on the
/// full line, a falling line on the half line, a downward quadratic) are
/// rejected as tail_uncertifiable. Slack below -1e-9 is slack_violation.
MinorantCertificate certify(MinorantCertificate candidate,
                            const Tolerances& tol = {});

struct HalfLineBound {
  double min_time = 0.0;  // t0 >= min_time; may be infinite_time
};

/// Restriction extracted from <f(Ht0/hbar)> >= 0: either a set of excluded
/// times (quadratic family) or a direct lower bound (linear family).
using TimeBound = std::variant<IntervalSet, HalfLineBound>;

/// Substitute moments into the certificate's averaged inequality.
/// Half-line certificates demand min_energy = 0; anything else is a
/// domain_mismatch.
TimeBound bound_from_certificate(const MinorantCertificate& cert,
                                 const Moments& m, double hbar,
                                 const Tolerances& tol = {});

/// Scalar summary of a TimeBound: the half-line threshold, or the supremum
/// of the excluded set (0 when nothing is excluded). For the quadratic
/// family the supremum is exactly what the alpha-union argument turns into
/// a genuine lower bound on t0.
double implied_lower_bound(const TimeBound& bound);

/// Search (coefficients, A, alpha) by derivative-free optimization for the
/// certificate whose restriction pushes t0 out the furthest, subject to
/// certify passing. Deterministic: fixed restart grid over the alpha window,
/// Nelder-Mead plus a compass polish, ties broken by parameter order.
MinorantCertificate optimize_family(MinorantFamily family, MinorantDomain domain,
                                    const Moments& m, double hbar,
                                    const Tolerances& tol = {});

}  // namespace qsl
