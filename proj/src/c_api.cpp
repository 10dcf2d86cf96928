#include "dhpss/dhpss.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "dhpss/analysis.hpp"
#include "dhpss/errors.hpp"
#include "dhpss/ingham.hpp"
#include "dhpss/spectra.hpp"

#ifndef DHPSS_VERSION_STRING
#define DHPSS_VERSION_STRING "0.0.0"
#endif

struct dhpss_zeros {
  dhpss::ZeroTable table;
};

struct dhpss_problem {
  dhpss::Problem problem;
};

struct dhpss_spectrum {
  dhpss::Spectrum spectrum;
  std::shared_ptr<const dhpss::ZeroTable> zeros;
};

struct dhpss_report_list {
  std::vector<dhpss::BoundReport> reports;
};

namespace {

thread_local std::string g_last_error;

dhpss_status fail(dhpss_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class F>
dhpss_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return DHPSS_OK;
  } catch (const dhpss::DomainError& e) {
    return fail(DHPSS_ERR_DOMAIN, e.what());
  } catch (const dhpss::IndexError& e) {
    return fail(DHPSS_ERR_INDEX, e.what());
  } catch (const dhpss::ConvergenceError& e) {
    return fail(DHPSS_ERR_CONVERGENCE, e.what());
  } catch (const dhpss::NumericalError& e) {
    return fail(DHPSS_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DHPSS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DHPSS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DHPSS_ERR_INTERNAL, "unknown error");
  }
}

#define DHPSS_REQUIRE(p)                                      \
  do {                                                        \
    if ((p) == nullptr) return fail(DHPSS_ERR_NULL, #p " is null"); \
  } while (0)

dhpss::Method to_method(dhpss_method m) {
  switch (m) {
    case DHPSS_METHOD_GRAM:
      return dhpss::Method::gram_closed_form;
    case DHPSS_METHOD_GRAM_QUADRATURE:
      return dhpss::Method::gram_quadrature;
    case DHPSS_METHOD_NYSTROM:
      return dhpss::Method::nystrom;
  }
  throw dhpss::DomainError("unknown method");
}

}  // namespace

extern "C" {

const char* dhpss_last_error(void) { return g_last_error.c_str(); }

const char* dhpss_version(void) { return DHPSS_VERSION_STRING; }

dhpss_status dhpss_bessel_j(double alpha, double x, double* out) {
  DHPSS_REQUIRE(out);
  return guarded([&] { *out = dhpss::eval_j(dhpss::Order(alpha), x); });
}

dhpss_status dhpss_zeros_create(double alpha, size_t count, dhpss_zeros** out) {
  DHPSS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (count < 1) throw dhpss::DomainError("count must be >= 1");
    *out = new dhpss_zeros{dhpss::find_zeros(dhpss::Order(alpha), count)};
  });
}

void dhpss_zeros_destroy(dhpss_zeros* zeros) { delete zeros; }

size_t dhpss_zeros_count(const dhpss_zeros* zeros) { return zeros ? zeros->table.size() : 0; }

dhpss_status dhpss_zeros_get(const dhpss_zeros* zeros, size_t n, double* zero, double* residual) {
  DHPSS_REQUIRE(zeros);
  return guarded([&] {
    const double s = zeros->table.zero(n);
    if (zero) *zero = s;
    if (residual) *residual = std::abs(dhpss::eval_j(zeros->table.order(), s));
  });
}

dhpss_status dhpss_problem_create(double alpha, double omega, int n_basis, int quad_points, dhpss_problem** out) {
  DHPSS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new dhpss_problem{dhpss::Problem::make(alpha, omega, n_basis, quad_points)}; });
}

void dhpss_problem_destroy(dhpss_problem* problem) { delete problem; }

dhpss_status dhpss_problem_get_info(const dhpss_problem* problem, dhpss_problem_info* out) {
  DHPSS_REQUIRE(problem);
  DHPSS_REQUIRE(out);
  return guarded([&] {
    const auto& cfg = problem->problem.config;
    out->alpha = cfg.order.value();
    out->omega = cfg.band.omega();
    out->n_basis = cfg.n_basis;
    out->quad_points = cfg.quad_points;
    out->c = dhpss::BandwidthC::from_config(cfg).value();
    out->c_n = dhpss::BandwidthC::asymptotic(cfg.order, cfg.n_basis).value();
  });
}

dhpss_status dhpss_kernel_value(const dhpss_problem* problem, dhpss_kernel_kind kind, double x, double y,
                                double* out) {
  DHPSS_REQUIRE(problem);
  DHPSS_REQUIRE(out);
  return guarded([&] {
    const auto& cfg = problem->problem.config;
    const auto& zeros = problem->problem.zeros;
    const auto c_n = dhpss::BandwidthC::asymptotic(cfg.order, cfg.n_basis);
    switch (kind) {
      case DHPSS_KERNEL_DISCRETE:
        *out = dhpss::discrete_kernel(cfg, zeros, x, y);
        return;
      case DHPSS_KERNEL_CONTINUOUS:
        *out = dhpss::continuous_K(c_n, cfg.order, x, y);
        return;
      case DHPSS_KERNEL_CORRECTION:
        *out = dhpss::correction_F(c_n, cfg.order, x, y);
        return;
      case DHPSS_KERNEL_RESIDUAL:
        *out = dhpss::kernel_residual_at(cfg, zeros, x, y);
        return;
    }
    throw dhpss::DomainError("unknown kernel kind");
  });
}

dhpss_status dhpss_spectrum_compute(const dhpss_problem* problem, dhpss_method method, dhpss_spectrum** out) {
  DHPSS_REQUIRE(problem);
  DHPSS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto& p = problem->problem;
    auto zeros = std::make_shared<const dhpss::ZeroTable>(p.zeros);
    *out = new dhpss_spectrum{dhpss::compute_spectrum(p.config, *zeros, to_method(method)), zeros};
  });
}

void dhpss_spectrum_destroy(dhpss_spectrum* spectrum) { delete spectrum; }

size_t dhpss_spectrum_size(const dhpss_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.eigenvalues.size() : 0;
}

dhpss_status dhpss_spectrum_eigenvalues(const dhpss_spectrum* spectrum, double* out, size_t len) {
  DHPSS_REQUIRE(spectrum);
  DHPSS_REQUIRE(out);
  const auto& v = spectrum->spectrum.eigenvalues;
  for (size_t i = 0; i < len && i < v.size(); ++i) out[i] = v[i];
  return DHPSS_OK;
}

dhpss_status dhpss_spectrum_coefficients(const dhpss_spectrum* spectrum, size_t n, double* out, size_t len) {
  DHPSS_REQUIRE(spectrum);
  DHPSS_REQUIRE(out);
  const auto& coeffs = spectrum->spectrum.coefficients;
  if (n >= coeffs.size()) return fail(DHPSS_ERR_INDEX, "eigenvector index out of range");
  for (size_t i = 0; i < len && i < coeffs[n].size(); ++i) out[i] = coeffs[n][i];
  return DHPSS_OK;
}

dhpss_status dhpss_spectrum_eval(const dhpss_spectrum* spectrum, size_t n, double r, double* out) {
  DHPSS_REQUIRE(spectrum);
  DHPSS_REQUIRE(out);
  return guarded([&] { *out = dhpss::synthesize_eigenfunction(spectrum->spectrum, *spectrum->zeros, n, r); });
}

dhpss_status dhpss_spectrum_stats(const dhpss_spectrum* spectrum, double* min_gap, double* rank_tail) {
  DHPSS_REQUIRE(spectrum);
  if (min_gap) *min_gap = spectrum->spectrum.min_gap;
  if (rank_tail) *rank_tail = spectrum->spectrum.rank_tail;
  return DHPSS_OK;
}

dhpss_status dhpss_analyze(const dhpss_problem* problem, const char* check, double eps, dhpss_report_list** out) {
  DHPSS_REQUIRE(problem);
  DHPSS_REQUIRE(check);
  DHPSS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto& cfg = problem->problem.config;
    const auto& zeros = problem->problem.zeros;
    const std::string_view name(check);
    auto list = std::make_unique<dhpss_report_list>();
    if (name == "decay") {
      list->reports = dhpss::decay_check(cfg, zeros);
    } else if (name == "sandwich") {
      list->reports = dhpss::sandwich_check(cfg, zeros);
    } else if (name == "kernel") {
      list->reports.push_back(dhpss::kernel_check(cfg, zeros));
    } else if (name == "l2") {
      list->reports.push_back(dhpss::l2_spectral_distance(cfg, zeros));
    } else if (name == "trace") {
      list->reports.push_back(dhpss::trace_check(cfg, zeros));
    } else if (name == "plunge") {
      list->reports.push_back(dhpss::plunge_check(cfg, zeros, eps));
    } else {
      throw dhpss::DomainError("unknown check '" + std::string(name) + "'");
    }
    *out = list.release();
  });
}

void dhpss_report_list_destroy(dhpss_report_list* list) { delete list; }

size_t dhpss_report_list_size(const dhpss_report_list* list) { return list ? list->reports.size() : 0; }

dhpss_status dhpss_report_get(const dhpss_report_list* list, size_t i, dhpss_report* out) {
  DHPSS_REQUIRE(list);
  DHPSS_REQUIRE(out);
  if (i >= list->reports.size()) return fail(DHPSS_ERR_INDEX, "report index out of range");
  const auto& r = list->reports[i];
  out->name = r.name.c_str();
  out->computed = r.computed;
  out->bound = r.bound;
  out->margin = r.margin;
  out->tolerance = r.tolerance;
  out->satisfied = r.satisfied ? 1 : 0;
  out->asserted = r.asserted ? 1 : 0;
  out->note = r.note.c_str();
  out->context_count = r.context.size();
  return DHPSS_OK;
}

dhpss_status dhpss_report_context(const dhpss_report_list* list, size_t i, size_t k, const char** key,
                                  double* value) {
  DHPSS_REQUIRE(list);
  if (i >= list->reports.size()) return fail(DHPSS_ERR_INDEX, "report index out of range");
  const auto& ctx = list->reports[i].context;
  if (k >= ctx.size()) return fail(DHPSS_ERR_INDEX, "context index out of range");
  if (key) *key = ctx[k].first.c_str();
  if (value) *value = ctx[k].second;
  return DHPSS_OK;
}

dhpss_status dhpss_ingham(double T, const long* freqs, size_t count, dhpss_ingham_result* out) {
  DHPSS_REQUIRE(out);
  return guarded([&] {
    const dhpss::InghamConfig cfg =
        freqs ? dhpss::InghamConfig(T, std::vector<long>(freqs, freqs + count))
              : dhpss::InghamConfig::consecutive(T, static_cast<long>(count));
    const dhpss::InghamResult r = dhpss::ingham(cfg);
    out->T = r.T;
    out->n_of_T = r.n_of_T;
    out->omega = r.omega;
    out->eigenvalue_used = r.eigenvalue_used;
    out->upper_bound = r.upper_bound;
    out->best_constant = r.best_constant;
    out->closed_form = r.closed_form;
    out->a_t = r.a_t;
    out->asymptotic_upper = r.asymptotic_upper;
    out->asymptotic_lower = r.asymptotic_lower;
    out->full_problem_eigenvalue = r.full_problem_eigenvalue;
    out->full_problem_size = r.full_problem_size;
    out->envelope_bound = r.envelope_bound;
    out->envelope_in_window = r.envelope_in_window;
    out->best_le_upper = r.best_le_upper;
    out->upper_le_closed = r.upper_le_closed;
    out->upper_le_envelope = r.upper_le_envelope;
    out->envelope_le_closed = r.envelope_le_closed;
  });
}

dhpss_status dhpss_ingham_upper_closed(double T, double* out) {
  DHPSS_REQUIRE(out);
  return guarded([&] { *out = dhpss::ingham_upper_closed(T); });
}

}  // extern "C"
