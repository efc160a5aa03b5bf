#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grslab/csymmetry.hpp"
#include "grslab/hamiltonian.hpp"

namespace grslab {

enum class ExampleId { shifted_ho, perturbed_anharmonic, example1 };

/// "shifted-ho", "perturbed-anharmonic", "example1".
const char* example_name(ExampleId id);
/// Throws ErrorCode::usage for an unknown name.
ExampleId parse_example(std::string_view name);

struct ExampleSpec {
  ExampleId id = ExampleId::shifted_ho;
  double a = 0.5;
  double beta = 4.0;
  std::string p_expr = "(scale 0.5 (atan x))";
  std::size_t N = 16;
  /// 0 selects N.
  std::size_t basis_size = 0;
  /// Gauss-Hermite order of the Hermite basis; 0 selects default_quad_order.
  int quad_order = 0;
  /// Uniform grid of the numeric basis (perturbed-anharmonic).
  double basis_grid_l = 8.0;
  int basis_grid_points = 2000;
  /// Uniform grid for finite-difference residuals (Hermite examples).
  double fd_grid_l = 12.0;
  int fd_grid_points = 4000;
};

/// ExampleSpec with the per-example default N (16, 8, 12).
ExampleSpec default_spec(ExampleId id);

/// Throws ErrorCode::domain when a == 0 (shifted-ho), beta <= 2 or p not
/// odd (perturbed-anharmonic), N == 0, or basis_size < N.
void validate(const ExampleSpec& spec);

/// Throws ErrorCode::grammar for an unparsable p_expr.
MetricOperatorQ example_q(const ExampleSpec& spec);

std::shared_ptr<const BiorthogonalSystem> make_example(const ExampleSpec& spec);

/// Verdict the paper reports for the example.
Verdict expected_verdict(ExampleId id);

/// Known eigenvalues of the differential Hamiltonian on phi_n, n < sys.N:
/// 2n + 1 + a^2, n + 1/2, or the numeric basis energies.
std::vector<cplx> example_eigenvalues(const ExampleSpec& spec, const BiorthogonalSystem& sys);

HamiltonianKind example_hamiltonian(const ExampleSpec& spec);

/// Grid for fd_matrix: the numeric basis grid for perturbed-anharmonic,
/// a fresh uniform grid otherwise.
RulePtr example_fd_grid(const ExampleSpec& spec, const BiorthogonalSystem& sys);

inline constexpr int kMaxOverlapIndex = 30;

/// |[phi_n, phi_m]| for phi_n = e^{-x^2/4} e_n, in closed form with a
/// terminating 2F1 and a log-space prefactor; 0 when n + m is odd.
double overlap_closed_form(int n, int m);

/// int e^{-x^2/2} e_n(x) e_m(x) dx by Gauss-Hermite quadrature for the
/// weight e^{-3x^2/2}, exact for the polynomial part.
double overlap_quadrature(int n, int m);

} // namespace grslab
