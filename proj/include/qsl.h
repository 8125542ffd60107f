/*
 * qsl -- quantum speed limit toolkit, C API.
 *
 * Computes orthogonalization times of quantum states from their energy
 * spectra, evaluates the dispersion (MT) and mean-energy (ML) lower bounds,
 * runs the cosine-minorant constraint machinery behind those bounds as
 * verifiable numerical objects, and constructs/validates the two-level
 * states that saturate the dispersion bound.
 *
 * All handles are opaque; every fallible call returns a qsl_status and
 * writes results through out-parameters. qsl_last_error_message() describes
 * the most recent failure on the calling thread.
 */
#ifndef QSL_H
#define QSL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QSL_API __declspec(dllexport)
#else
#define QSL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsl_status {
  QSL_OK = 0,
  QSL_ERR_INVALID_ARGUMENT = 1,
  QSL_ERR_ZERO_NORM = 2,
  QSL_ERR_ZERO_DISPERSION = 3,
  QSL_ERR_NONPOSITIVE_DISPERSION = 4,
  QSL_ERR_MISSING_LOWER_BOUND = 5,
  QSL_ERR_DEGENERATE_SPECTRUM = 6,
  QSL_ERR_MINORANT_VIOLATION = 7,
  QSL_ERR_TAIL_UNCERTIFIABLE = 8,
  QSL_ERR_SLACK_VIOLATION = 9,
  QSL_ERR_DOMAIN_MISMATCH = 10,
  QSL_ERR_VALIDATION = 11,
  QSL_ERR_NOMEM = 12,
  QSL_ERR_INTERNAL = 13
} qsl_status;

QSL_API const char* qsl_version(void);
QSL_API const char* qsl_status_name(qsl_status status);
QSL_API const char* qsl_last_error_message(void);

/* ------------------------------------------------------------------ */
/* Spectral states                                                     */

typedef struct qsl_state qsl_state;

typedef enum qsl_state_kind {
  QSL_STATE_DISCRETE = 0,
  QSL_STATE_QUADRATURE = 1
} qsl_state_kind;

/* Discrete spectrum: energies E_n with complex amplitudes c_n. amp_im may
 * be NULL for real amplitudes. The state is canonicalized on construction:
 * levels sorted by energy, duplicate energies merged by probability,
 * weights normalized to 1 (the absorbed factor is qsl_state_norm_correction). */
QSL_API qsl_status qsl_state_create_discrete(double hbar, const double* energies,
                                             const double* amp_re,
                                             const double* amp_im, size_t count,
                                             qsl_state** out);

/* Finite quadrature rule for a continuous energy distribution:
 * nonnegative weights over energy nodes, normalized to 1. */
QSL_API qsl_status qsl_state_create_quadrature(double hbar, const double* energies,
                                               const double* weights, size_t count,
                                               qsl_state** out);

/* Two-level state at mean +/- delta_e, probability 1/2 each, free phases.
 * The unique shape saturating the dispersion bound. */
QSL_API qsl_status qsl_state_create_intelligent(double hbar, double mean,
                                                double delta_e, double phase_lo,
                                                double phase_hi, qsl_state** out);

/* Gauss-Legendre quadrature state for a uniform energy density on
 * [energy_lo, energy_hi]. */
QSL_API qsl_status qsl_state_create_uniform_quadrature(double hbar,
                                                       double energy_lo,
                                                       double energy_hi,
                                                       size_t nodes,
                                                       qsl_state** out);

QSL_API void qsl_state_free(qsl_state* state);

QSL_API qsl_status qsl_state_get_kind(const qsl_state* state, qsl_state_kind* out);
QSL_API qsl_status qsl_state_hbar(const qsl_state* state, double* out);
QSL_API qsl_status qsl_state_size(const qsl_state* state, size_t* out);

/* Canonical (energy, probability) rows, ascending in energy. Both arrays
 * must hold at least qsl_state_size entries. */
QSL_API qsl_status qsl_state_spectrum(const qsl_state* state, double* energies,
                                      double* weights, size_t capacity);

/* Total input weight absorbed by normalization at construction. */
QSL_API qsl_status qsl_state_norm_correction(const qsl_state* state, double* out);

QSL_API qsl_status qsl_state_normalize(const qsl_state* state, qsl_state** out);
QSL_API qsl_status qsl_state_shift_energy(const qsl_state* state, double delta,
                                          qsl_state** out);

typedef struct qsl_moments {
  double mean;     /* <H> */
  double second;   /* <H^2> */
  double variance; /* <H^2> - <H>^2, tiny negatives clamped to 0 */
  int has_min_energy;
  double min_energy;
  int variance_clamped;
} qsl_moments;

QSL_API qsl_status qsl_state_moments(const qsl_state* state, qsl_moments* out);

/* ------------------------------------------------------------------ */
/* Dynamics                                                            */

/* S(t) = sum_n p_n exp(-i E_n t / hbar). */
QSL_API qsl_status qsl_survival_amplitude(const qsl_state* state, double t,
                                          double* re, double* im);

/* (<cos(Ht/hbar)>, <sin(Ht/hbar)>) = (Re S, -Im S). */
QSL_API qsl_status qsl_cos_sin_averages(const qsl_state* state, double t,
                                        double* cos_avg, double* sin_avg);

typedef struct qsl_orth_options {
  double horizon;   /* <= 0 selects 50x the dispersion bound */
  double eps_orth;  /* |S| threshold for orthogonality */
  int oversample;   /* grid points per fastest |S| period */
} qsl_orth_options;

QSL_API void qsl_orth_options_default(qsl_orth_options* opts);

typedef struct qsl_orth_result {
  int found;               /* 1 when |S(t0)| <= eps_orth inside the horizon */
  double t0;               /* NaN unless found */
  double min_abs_survival; /* smallest |S| seen by the scan */
  double argmin_time;      /* where the scan got closest */
  double horizon;
  double residual;         /* |S| at the reported time */
} qsl_orth_result;

/* Earliest t in (0, horizon] with |S(t)| <= eps_orth; grid scan with
 * bracketed golden-section refinement. Fails with QSL_ERR_ZERO_DISPERSION
 * when all weight sits on a single energy. opts may be NULL for defaults. */
QSL_API qsl_status qsl_orthogonalization_time(const qsl_state* state,
                                              const qsl_orth_options* opts,
                                              qsl_orth_result* out);

/* ------------------------------------------------------------------ */
/* Bounds                                                              */

/* pi hbar / (2 dE); +infinity when dE = 0. */
QSL_API qsl_status qsl_mt_bound(const qsl_moments* m, double hbar, double* out);

/* pi hbar / (2 (E - E0)); +infinity for the ground eigenstate. */
QSL_API qsl_status qsl_ml_bound(const qsl_moments* m, double hbar, double* out);

/* Comparison function (x + alpha)^2 - pi^2/4 + pi cos(x + alpha). */
QSL_API double qsl_gamma(double alpha, double x);

typedef struct qsl_minorant_scan {
  double min_value;
  double argmin_lo; /* refined minimizers; expected -alpha -+ pi/2 */
  double argmin_hi;
} qsl_minorant_scan;

/* Grid certification that the comparison function stays nonnegative on
 * [-alpha - span, -alpha + span]; span >= 2 pi, points >= 1e4. */
QSL_API qsl_status qsl_verify_quadratic_minorant(double alpha, double grid_span,
                                                 int64_t grid_points,
                                                 qsl_minorant_scan* out);

/* Coefficients of <H^2>/hbar^2 t^2 + 2 alpha <H>/hbar t + (alpha^2 - pi^2/4),
 * written to coeffs_out as {a0, a1, a2}. */
QSL_API qsl_status qsl_quadratic_constraint(const qsl_moments* m, double alpha,
                                            double hbar, double coeffs_out[3]);

typedef struct qsl_interval {
  double lo;
  double hi;
} qsl_interval;

/* Open interval of times excluded at this alpha; *nonempty = 0 when the
 * discriminant is <= 0 and no interval exists. */
QSL_API qsl_status qsl_excluded_interval(const qsl_moments* m, double alpha,
                                         double hbar, int* nonempty,
                                         qsl_interval* out);

/* Window of alpha values with a nonempty excluded interval. */
QSL_API qsl_status qsl_omega_window(const qsl_moments* m, qsl_interval* out);

typedef struct qsl_interval_set qsl_interval_set;

/* Union of excluded intervals over n_alpha_samples uniform alpha values
 * across the window. Converges to the single open interval
 * (-pi hbar/(2 dE), +pi hbar/(2 dE)) as samples grow. */
QSL_API qsl_status qsl_union_excluded(const qsl_moments* m, double hbar,
                                      int64_t n_alpha_samples,
                                      qsl_interval_set** out);

QSL_API size_t qsl_interval_set_size(const qsl_interval_set* set);
QSL_API qsl_status qsl_interval_set_get(const qsl_interval_set* set, size_t index,
                                        qsl_interval* out);
QSL_API void qsl_interval_set_free(qsl_interval_set* set);

/* <gamma_alpha(Ht/hbar)> over the state's energy distribution. */
QSL_API qsl_status qsl_mean_gamma(const qsl_state* state, double t, double alpha,
                                  double* out);

typedef struct qsl_saturation_result {
  int is_intelligent;
  size_t occupied_levels;
  double prob_deviation;   /* max |p - 1/2|; NaN unless two levels occupied */
  double energy_deviation; /* max |E - (mean -+ dE)|; NaN likewise */
} qsl_saturation_result;

/* True iff exactly two occupied levels with weight 1/2 each at mean +/- dE;
 * exactly those states reach the dispersion bound. Discrete states only. */
QSL_API qsl_status qsl_saturation_check(const qsl_state* state,
                                        qsl_saturation_result* out);

/* ------------------------------------------------------------------ */
/* Minorant certificates                                               */

typedef enum qsl_minorant_family {
  QSL_FAMILY_LINEAR = 0,
  QSL_FAMILY_QUADRATIC = 1
} qsl_minorant_family;

typedef enum qsl_minorant_domain {
  QSL_DOMAIN_HALF_LINE_NONNEG = 0,
  QSL_DOMAIN_FULL_LINE = 1
} qsl_minorant_domain;

typedef struct qsl_certificate {
  int family;       /* qsl_minorant_family */
  double coeffs[3]; /* f(x) = c0 + c1 x + c2 x^2 */
  double amplitude; /* A in f(x) >= A cos(x + phase) */
  double phase;
  int domain; /* qsl_minorant_domain */
  double certified_slack;
  double grid_span;
  int64_t grid_points;
} qsl_certificate;

/* Fill certified_slack by grid scan plus analytic tail domination.
 * grid_points >= 1e5, grid_span >= 4 pi. */
QSL_API qsl_status qsl_certify(qsl_certificate* cert);

typedef struct qsl_time_bound {
  int is_half_line;
  double half_line_min;       /* t0 >= this, when is_half_line */
  qsl_interval_set* excluded; /* otherwise; free with qsl_interval_set_free */
  double implied_lower_bound; /* scalar summary of the restriction */
} qsl_time_bound;

/* Substitute moments into the certificate's averaged inequality. */
QSL_API qsl_status qsl_bound_from_certificate(const qsl_certificate* cert,
                                              const qsl_moments* m, double hbar,
                                              qsl_time_bound* out);

QSL_API void qsl_time_bound_clear(qsl_time_bound* bound);

/* Derivative-free search for the family member whose restriction pushes t0
 * out the furthest; deterministic restarts and tie-breaking. */
QSL_API qsl_status qsl_optimize_family(int family, int domain,
                                       const qsl_moments* m, double hbar,
                                       qsl_certificate* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSL_H */
