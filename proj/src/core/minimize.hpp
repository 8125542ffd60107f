#pragma once

#include <utility>

namespace qsl {

struct ScalarMin {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of f over [a, b] down to bracket width tol_x.
/// Derivative-free, so it tolerates the kink of |S| at a zero crossing.
template <class F>
ScalarMin golden_section_min(F&& f, double a, double b, double tol_x,
                             int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < max_iter && (b - a) > tol_x; ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = f(xm);
  ScalarMin best{xm, fm};
  if (f1 < best.value) best = {x1, f1};
  if (f2 < best.value) best = {x2, f2};
  return best;
}

/// Golden-section maximization, returned as the maximizing point and value.
template <class F>
ScalarMin golden_section_max(F&& f, double a, double b, double tol_x,
                             int max_iter = 200) {
  auto neg = [&f](double x) { return -f(x); };
  ScalarMin m = golden_section_min(neg, a, b, tol_x, max_iter);
  return {m.x, -m.value};
}

}  // namespace qsl
