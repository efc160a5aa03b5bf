#include "grslab/grslab.h"

#include <exception>
#include <memory>
#include <string>

#include "grslab/error.hpp"
#include "grslab/specfun.hpp"
#include "grslab/suite.hpp"

struct grslab_system {
  std::shared_ptr<const grslab::BiorthogonalSystem> sys;
};

struct grslab_report {
  grslab::VerificationReport report;
};

namespace {

thread_local std::string last_error;

template <class F>
grslab_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return GRSLAB_OK;
  } catch (const grslab::Error& e) {
    last_error = e.what();
    return static_cast<grslab_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return GRSLAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return GRSLAB_ERR_INTERNAL;
  }
}

grslab_status null_argument(const char* fn) {
  last_error = std::string(fn) + ": null argument";
  return GRSLAB_ERR_NULL;
}

grslab::ExampleSpec to_spec(const grslab_example_params& p) {
  using grslab::ExampleId;
  ExampleId id;
  switch (p.id) {
    case GRSLAB_SHIFTED_HO: id = ExampleId::shifted_ho; break;
    case GRSLAB_PERTURBED_ANHARMONIC: id = ExampleId::perturbed_anharmonic; break;
    case GRSLAB_EXAMPLE1: id = ExampleId::example1; break;
    default: grslab::fail(grslab::ErrorCode::usage, "unknown example id");
  }
  grslab::ExampleSpec spec = grslab::default_spec(id);
  if (p.a != 0.0) spec.a = p.a;
  if (p.beta != 0.0) spec.beta = p.beta;
  if (p.p_expr) spec.p_expr = p.p_expr;
  if (p.n != 0) spec.N = p.n;
  return spec;
}

} // namespace

extern "C" {

const char* grslab_version(void) { return "1.0.0"; }

const char* grslab_last_error(void) { return last_error.c_str(); }

grslab_status grslab_log_gamma(double x, double* out) {
  if (!out) return null_argument("grslab_log_gamma");
  return guarded([&] { *out = grslab::log_gamma(x); });
}

grslab_status grslab_hyp2f1_terminating(int m, double b, double c, double z, double* out) {
  if (!out) return null_argument("grslab_hyp2f1_terminating");
  return guarded([&] { *out = grslab::hyp2f1_terminating({m, b, c, z}); });
}

grslab_status grslab_overlap_closed_form(int n, int m, double* out) {
  if (!out) return null_argument("grslab_overlap_closed_form");
  return guarded([&] { *out = grslab::overlap_closed_form(n, m); });
}

grslab_status grslab_overlap_quadrature(int n, int m, double* out) {
  if (!out) return null_argument("grslab_overlap_quadrature");
  return guarded([&] { *out = grslab::overlap_quadrature(n, m); });
}

grslab_status grslab_system_create(const grslab_example_params* params, grslab_system** out) {
  if (!params || !out) return null_argument("grslab_system_create");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<grslab_system>();
    handle->sys = grslab::make_example(to_spec(*params));
    *out = handle.release();
  });
}

void grslab_system_destroy(grslab_system* sys) { delete sys; }

grslab_status grslab_system_size(const grslab_system* sys, size_t* out) {
  if (!sys || !out) return null_argument("grslab_system_size");
  *out = sys->sys->N;
  return GRSLAB_OK;
}

grslab_status grslab_biorthogonality_defect(const grslab_system* sys, double* out) {
  if (!sys || !out) return null_argument("grslab_biorthogonality_defect");
  return guarded([&] { *out = grslab::biorthogonality_defect(*sys->sys); });
}

grslab_status grslab_j_orthonormality_defect(const grslab_system* sys, double* out) {
  if (!sys || !out) return null_argument("grslab_j_orthonormality_defect");
  return guarded([&] { *out = grslab::j_orthonormality_defect(*sys->sys); });
}

grslab_status grslab_krein_entry(const grslab_system* sys, size_t n, size_t m, double* re,
                                 double* im) {
  if (!sys || !re || !im) return null_argument("grslab_krein_entry");
  return guarded([&] {
    const auto& s = *sys->sys;
    if (n >= s.N || m >= s.N) grslab::fail(grslab::ErrorCode::domain, "krein_entry: index out of range");
    const auto v = grslab::krein_inner(s.phi[n], s.phi[m]);
    *re = v.real();
    *im = v.imag();
  });
}

grslab_status grslab_classify(const grslab_system* sys, grslab_verdict* out) {
  if (!sys || !out) return null_argument("grslab_classify");
  return guarded([&] {
    switch (grslab::classify_type(*sys->sys).verdict) {
      case grslab::Verdict::first_type: *out = GRSLAB_FIRST_TYPE; break;
      case grslab::Verdict::not_j_orthonormal: *out = GRSLAB_NOT_J_ORTHONORMAL; break;
      case grslab::Verdict::undetermined: *out = GRSLAB_UNDETERMINED; break;
    }
  });
}

grslab_status grslab_verify(const grslab_example_params* params, grslab_report** out) {
  if (!params || !out) return null_argument("grslab_verify");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<grslab_report>();
    handle->report = grslab::run_suite(to_spec(*params));
    *out = handle.release();
  });
}

void grslab_report_destroy(grslab_report* report) { delete report; }

grslab_status grslab_report_passed(const grslab_report* report, int* out) {
  if (!report || !out) return null_argument("grslab_report_passed");
  *out = report->report.passed() ? 1 : 0;
  return GRSLAB_OK;
}

grslab_status grslab_report_check_count(const grslab_report* report, size_t* out) {
  if (!report || !out) return null_argument("grslab_report_check_count");
  *out = report->report.checks.size();
  return GRSLAB_OK;
}

grslab_status grslab_report_check(const grslab_report* report, size_t index, const char** name,
                                  double* value, double* tolerance, int* pass) {
  if (!report) return null_argument("grslab_report_check");
  return guarded([&] {
    const auto& checks = report->report.checks;
    if (index >= checks.size()) grslab::fail(grslab::ErrorCode::domain, "report_check: index out of range");
    const auto& c = checks[index];
    if (name) *name = c.name.c_str();
    if (value) *value = c.value;
    if (tolerance) *tolerance = c.tolerance;
    if (pass) *pass = c.pass() ? 1 : 0;
  });
}

grslab_status grslab_report_write_json(const grslab_report* report, const char* path) {
  if (!report || !path) return null_argument("grslab_report_write_json");
  return guarded([&] { grslab::write_json(report->report, path); });
}

} // extern "C"
