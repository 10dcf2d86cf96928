#ifndef DHPSS_DHPSS_H
#define DHPSS_DHPSS_H

#include <stddef.h>

#if defined(_WIN32)
#define DHPSS_API __declspec(dllexport)
#else
#define DHPSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dhpss_status {
  DHPSS_OK = 0,
  DHPSS_ERR_DOMAIN = 1,      /* argument outside its admissible range */
  DHPSS_ERR_INDEX = 2,       /* index out of range */
  DHPSS_ERR_NUMERICAL = 3,   /* a numerical invariant failed */
  DHPSS_ERR_CONVERGENCE = 4, /* an iteration did not converge */
  DHPSS_ERR_NULL = 5,        /* null handle or output pointer */
  DHPSS_ERR_INTERNAL = 6
} dhpss_status;

typedef enum dhpss_method {
  DHPSS_METHOD_GRAM = 0,
  DHPSS_METHOD_GRAM_QUADRATURE = 1,
  DHPSS_METHOD_NYSTROM = 2
} dhpss_method;

typedef enum dhpss_kernel_kind {
  DHPSS_KERNEL_DISCRETE = 0,
  DHPSS_KERNEL_CONTINUOUS = 1, /* K_{c_N} */
  DHPSS_KERNEL_CORRECTION = 2, /* F_{c_N} */
  DHPSS_KERNEL_RESIDUAL = 3    /* discrete - continuous - correction */
} dhpss_kernel_kind;

typedef struct dhpss_zeros dhpss_zeros;
typedef struct dhpss_problem dhpss_problem;
typedef struct dhpss_spectrum dhpss_spectrum;
typedef struct dhpss_report_list dhpss_report_list;

/* Message of the last failed call on this thread ("" if none). */
DHPSS_API const char* dhpss_last_error(void);
DHPSS_API const char* dhpss_version(void);

/* Bessel layer */
DHPSS_API dhpss_status dhpss_bessel_j(double alpha, double x, double* out);
DHPSS_API dhpss_status dhpss_zeros_create(double alpha, size_t count, dhpss_zeros** out);
DHPSS_API void dhpss_zeros_destroy(dhpss_zeros* zeros);
DHPSS_API size_t dhpss_zeros_count(const dhpss_zeros* zeros);
/* n is 1-based; residual = |J_alpha(s_n)|. */
DHPSS_API dhpss_status dhpss_zeros_get(const dhpss_zeros* zeros, size_t n, double* zero, double* residual);

/* Problems: quad_points <= 0 selects the default rule. */
typedef struct dhpss_problem_info {
  double alpha;
  double omega;
  int n_basis;
  int quad_points;
  double c;   /* (N + alpha/2 + 1/4) pi omega */
  double c_n; /* (N + alpha/2 + 1/4) pi */
} dhpss_problem_info;

DHPSS_API dhpss_status dhpss_problem_create(double alpha, double omega, int n_basis, int quad_points,
                                            dhpss_problem** out);
DHPSS_API void dhpss_problem_destroy(dhpss_problem* problem);
DHPSS_API dhpss_status dhpss_problem_get_info(const dhpss_problem* problem, dhpss_problem_info* out);
DHPSS_API dhpss_status dhpss_kernel_value(const dhpss_problem* problem, dhpss_kernel_kind kind, double x,
                                          double y, double* out);

/* Spectra */
DHPSS_API dhpss_status dhpss_spectrum_compute(const dhpss_problem* problem, dhpss_method method,
                                              dhpss_spectrum** out);
DHPSS_API void dhpss_spectrum_destroy(dhpss_spectrum* spectrum);
DHPSS_API size_t dhpss_spectrum_size(const dhpss_spectrum* spectrum);
/* Copies min(len, size) descending eigenvalues. */
DHPSS_API dhpss_status dhpss_spectrum_eigenvalues(const dhpss_spectrum* spectrum, double* out, size_t len);
/* Coefficients of the n-th (0-based) sequence in the Fourier-Bessel basis. */
DHPSS_API dhpss_status dhpss_spectrum_coefficients(const dhpss_spectrum* spectrum, size_t n, double* out,
                                                   size_t len);
DHPSS_API dhpss_status dhpss_spectrum_eval(const dhpss_spectrum* spectrum, size_t n, double r, double* out);
DHPSS_API dhpss_status dhpss_spectrum_stats(const dhpss_spectrum* spectrum, double* min_gap, double* rank_tail);

/* Analysis: check is one of decay, sandwich, kernel, l2, trace, plunge.
   eps is used by plunge only. */
typedef struct dhpss_report {
  const char* name;
  double computed;
  double bound;
  double margin;
  double tolerance;
  int satisfied;
  int asserted;
  const char* note;
  size_t context_count;
} dhpss_report;

DHPSS_API dhpss_status dhpss_analyze(const dhpss_problem* problem, const char* check, double eps,
                                     dhpss_report_list** out);
DHPSS_API void dhpss_report_list_destroy(dhpss_report_list* list);
DHPSS_API size_t dhpss_report_list_size(const dhpss_report_list* list);
/* Strings stay valid until the list is destroyed. */
DHPSS_API dhpss_status dhpss_report_get(const dhpss_report_list* list, size_t i, dhpss_report* out);
DHPSS_API dhpss_status dhpss_report_context(const dhpss_report_list* list, size_t i, size_t k, const char** key,
                                            double* value);

/* Ingham constant. freqs may be NULL, meaning 1..count. */
typedef struct dhpss_ingham_result {
  double T;
  long n_of_T;
  double omega;
  double eigenvalue_used;
  double upper_bound;
  double best_constant;
  double closed_form;
  double a_t;
  double asymptotic_upper;
  double asymptotic_lower;
  double full_problem_eigenvalue; /* NaN when not formed */
  long full_problem_size;
  double envelope_bound;
  int envelope_in_window;
  int best_le_upper;
  int upper_le_closed;
  int upper_le_envelope;
  int envelope_le_closed;
} dhpss_ingham_result;

DHPSS_API dhpss_status dhpss_ingham(double T, const long* freqs, size_t count, dhpss_ingham_result* out);
DHPSS_API dhpss_status dhpss_ingham_upper_closed(double T, double* out);

#ifdef __cplusplus
}
#endif

#endif
