#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grslab/catalog.hpp"
#include "grslab/report.hpp"

namespace grslab {

/// Named defaults for every tolerance that appears in a report.
struct Tolerances {
  double biorth = 1e-8;
  double biorth_numeric = 1e-7;
  double krein = kKreinTol;
  double partner = 1e-7;
  double c_squared = 1e-8;
  double eq24 = 1e-8;
  double expansion = 1e-8;
  double g0 = 1e-7;
  double eigen = 5e-3;
  double eigen_perturbed = 1e-2;
  double fd_ratio_low = 3.0;
  double fd_ratio_high = 5.0;
  /// Lower bound on | |[phi_0, phi_0]| - 1 | when J-orthonormality must fail.
  double witness_min = 0.18;
  double overlap_rel = 1e-8;
  double overlap_odd = 1e-12;
};

inline constexpr unsigned long long kSuiteSeed = 20240611ULL;

struct SuiteOptions {
  Tolerances tol;
  /// Overrides expected_verdict(spec.id).
  std::optional<Verdict> expect;
  bool parallel = false;
  /// Krein Gram matrix [phi_n, phi_m] destination, if any.
  std::string csv_path;
  int random_functions = 10;
  int g0_vectors = 50;
  /// Eigen-residuals are checked for n <= eigen_max_n.
  std::size_t eigen_max_n = 3;
};

/// Builds the example and runs its checks. Numeric errors are recorded as
/// failed checks; only I/O errors on csv_path propagate.
VerificationReport run_suite(const ExampleSpec& spec, const SuiteOptions& options = {});

struct OverlapRow {
  int n = 0;
  int m = 0;
  double closed_form = 0.0;
  double quadrature = 0.0;
  /// Relative difference for n + m even; |quadrature| for n + m odd.
  double rel_diff = 0.0;
};

std::vector<OverlapRow> overlap_table(int n_max);

/// Header `n,m,closed_form,quadrature,rel_diff`.
std::string overlap_csv(const std::vector<OverlapRow>& rows);

/// Checks: max relative difference (even), max |quadrature| (odd), and the
/// (0,0) value against sqrt(2/3).
VerificationReport overlap_report(int n_max, const Tolerances& tol = {});

} // namespace grslab
