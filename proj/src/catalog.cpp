#include "grslab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "grslab/error.hpp"
#include "grslab/specfun.hpp"

namespace grslab {

const char* example_name(ExampleId id) {
  switch (id) {
    case ExampleId::shifted_ho: return "shifted-ho";
    case ExampleId::perturbed_anharmonic: return "perturbed-anharmonic";
    case ExampleId::example1: return "example1";
  }
  return "shifted-ho";
}

ExampleId parse_example(std::string_view name) {
  for (ExampleId id : {ExampleId::shifted_ho, ExampleId::perturbed_anharmonic, ExampleId::example1}) {
    if (name == example_name(id)) return id;
  }
  fail(ErrorCode::usage, "unknown example '" + std::string(name) +
                             "' (expected shifted-ho, perturbed-anharmonic or example1)");
}

ExampleSpec default_spec(ExampleId id) {
  ExampleSpec spec;
  spec.id = id;
  switch (id) {
    case ExampleId::shifted_ho: spec.N = 16; break;
    case ExampleId::perturbed_anharmonic: spec.N = 8; break;
    case ExampleId::example1: spec.N = 12; break;
  }
  return spec;
}

void validate(const ExampleSpec& spec) {
  if (spec.N == 0) fail(ErrorCode::domain, "example: N must be positive");
  if (spec.basis_size != 0 && spec.basis_size < spec.N) {
    fail(ErrorCode::domain, "example: basis size smaller than N");
  }
  if (spec.id == ExampleId::shifted_ho && (spec.a == 0.0 || !std::isfinite(spec.a))) {
    fail(ErrorCode::domain, "shifted-ho: a must be a nonzero real");
  }
  if (spec.id == ExampleId::perturbed_anharmonic) {
    if (!(spec.beta > 2.0)) fail(ErrorCode::domain, "perturbed-anharmonic: beta must exceed 2");
    const Expr p = Expr::parse(spec.p_expr);
    const QuadratureRule probe = uniform_rule(spec.basis_grid_l, 257);
    for (double x : probe.nodes) {
      const double scale = std::max(1.0, std::abs(p(x)));
      if (std::abs(p(x) + p(-x)) > kOddnessTol * scale) {
        std::ostringstream os;
        os << "perturbed-anharmonic: p is not odd (p(" << x << ") + p(" << -x
           << ") = " << p(x) + p(-x) << ")";
        fail(ErrorCode::domain, os.str());
      }
    }
  }
}

MetricOperatorQ example_q(const ExampleSpec& spec) {
  switch (spec.id) {
    case ExampleId::shifted_ho:
      return MetricOperatorQ::translation(
          spec.a, std::clamp(std::abs(spec.a), MetricOperatorQ::kDefaultTranslationCap,
                             MetricOperatorQ::kMaxTranslationCap));
    case ExampleId::perturbed_anharmonic:
      return MetricOperatorQ::multiplication(Expr::scaled(2.0, Expr::parse(spec.p_expr)));
    case ExampleId::example1:
      return MetricOperatorQ::multiplication("(scale -0.5 (pow x 2))");
  }
  fail(ErrorCode::structure, "example_q: unknown example");
}

std::shared_ptr<const BiorthogonalSystem> make_example(const ExampleSpec& spec) {
  validate(spec);
  const std::size_t size = spec.basis_size == 0 ? spec.N : spec.basis_size;
  BasisPtr basis;
  if (spec.id == ExampleId::perturbed_anharmonic) {
    auto grid = std::make_shared<const QuadratureRule>(
        uniform_rule(spec.basis_grid_l, spec.basis_grid_points));
    basis = anharmonic_eigenbasis(spec.beta, grid, size);
  } else {
    basis = hermite_basis(size, spec.quad_order);
  }
  return std::make_shared<const BiorthogonalSystem>(build_system(example_q(spec), basis, spec.N));
}

Verdict expected_verdict(ExampleId id) {
  return id == ExampleId::example1 ? Verdict::not_j_orthonormal : Verdict::first_type;
}

std::vector<cplx> example_eigenvalues(const ExampleSpec& spec, const BiorthogonalSystem& sys) {
  std::vector<cplx> out(sys.N);
  for (std::size_t n = 0; n < sys.N; ++n) {
    const double k = static_cast<double>(n);
    switch (spec.id) {
      case ExampleId::shifted_ho: out[n] = 2.0 * k + 1.0 + spec.a * spec.a; break;
      case ExampleId::example1: out[n] = k + 0.5; break;
      case ExampleId::perturbed_anharmonic: out[n] = sys.basis->energies[n]; break;
    }
  }
  return out;
}

HamiltonianKind example_hamiltonian(const ExampleSpec& spec) {
  switch (spec.id) {
    case ExampleId::shifted_ho: return hamiltonian_kind::ShiftedHO{spec.a};
    case ExampleId::example1: return hamiltonian_kind::Example1{};
    case ExampleId::perturbed_anharmonic:
      return hamiltonian_kind::PerturbedAnharmonic{spec.beta, Expr::parse(spec.p_expr)};
  }
  fail(ErrorCode::structure, "example_hamiltonian: unknown example");
}

RulePtr example_fd_grid(const ExampleSpec& spec, const BiorthogonalSystem& sys) {
  if (spec.id == ExampleId::perturbed_anharmonic) return sys.basis->grid;
  return std::make_shared<const QuadratureRule>(uniform_rule(spec.fd_grid_l, spec.fd_grid_points));
}

double overlap_closed_form(int n, int m) {
  if (n < 0 || m < 0 || n > kMaxOverlapIndex || m > kMaxOverlapIndex) {
    std::ostringstream os;
    os << "overlap_closed_form: indices (" << n << ", " << m << ") outside [0, " << kMaxOverlapIndex
       << "]";
    fail(ErrorCode::domain, os.str());
  }
  if ((n + m) % 2 != 0) return 0.0;
  const double s = static_cast<double>(n + m + 1);
  const double log_prefactor =
      0.5 * (s * (std::numbers::ln2 - std::log(3.0)) - std::log(std::numbers::pi) -
             log_gamma(n + 1.0) - log_gamma(m + 1.0)) +
      log_gamma(0.5 * s);
  const double f = hyp2f1_terminating({m, -static_cast<double>(n), 0.5 * (1.0 - m - n), 1.5});
  return std::exp(log_prefactor) * std::abs(f);
}

double overlap_quadrature(int n, int m) {
  if (n < 0 || m < 0 || n > kDefaultMaxDegree || m > kDefaultMaxDegree) {
    fail(ErrorCode::domain, "overlap_quadrature: index out of range");
  }
  const int top = std::max(n, m);
  const QuadratureRule rule = gauss_hermite_rule((n + m) / 2 + 8, 1.5);
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double x = rule.nodes[j];
    const auto e = hermite_functions_real(top, x);
    sum += rule.dx_weights[j] * e[n] * e[m] * std::exp(-0.5 * x * x);
  }
  return sum;
}

} // namespace grslab
