#include "grslab/grs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

FunctionRep BiorthogonalSystem::conform(const FunctionRep& f) const {
  if (!phi.empty() && phi.front().is_samples() && f.is_coefficients()) {
    return f.sample_on(phi.front().rule());
  }
  return f;
}

FunctionRep BiorthogonalSystem::basis_function(std::size_t n) const {
  return conform(FunctionRep::basis_vector(basis, n));
}

FunctionRep BiorthogonalSystem::phi_on(std::size_t n, const RulePtr& rule) const {
  return apply_exp_q(Q, 0.5, FunctionRep::basis_vector(basis, n), rule).sample_on(rule);
}

FunctionRep BiorthogonalSystem::psi_on(std::size_t n, const RulePtr& rule) const {
  return apply_exp_q(Q, -0.5, FunctionRep::basis_vector(basis, n), rule).sample_on(rule);
}

BiorthogonalSystem build_system(const MetricOperatorQ& Q, BasisPtr basis, std::size_t N,
                                const BuildOptions& options) {
  if (!basis) fail(ErrorCode::structure, "build_system: null basis");
  if (N == 0 || N > basis->size) {
    std::ostringstream os;
    os << "build_system: truncation N = " << N << " outside [1, " << basis->size << "]";
    fail(ErrorCode::domain, os.str());
  }
  BiorthogonalSystem sys{basis, Q, N, {}, {}, std::nullopt, options.grid};
  for (std::size_t n = 0; n < N; ++n) {
    const FunctionRep e = FunctionRep::basis_vector(basis, n);
    for (int sign : {1, -1}) {
      const double score = domain_decay_score(Q, e, sign, options.grid);
      sys.min_decay_score = std::min(sys.min_decay_score, score);
      if (score < options.decay_threshold) {
        std::ostringstream os;
        os << "build_system: e_" << n << " fails the decay test for e^{" << (sign > 0 ? "+" : "-")
           << "Q/2} (score " << score << " < " << options.decay_threshold << ")";
        fail(ErrorCode::domain, os.str());
      }
    }
    sys.phi.push_back(apply_exp_q(Q, 0.5, e, options.grid));
    sys.psi.push_back(apply_exp_q(Q, -0.5, e, options.grid));
  }
  return sys;
}

double biorthogonality_defect(const BiorthogonalSystem& sys) {
  double worst = 0.0;
  for (std::size_t n = 0; n < sys.N; ++n) {
    for (std::size_t m = 0; m < sys.N; ++m) {
      const cplx target = n == m ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner(sys.phi[n], sys.psi[m]) - target));
    }
  }
  return worst;
}

std::pair<double, double> gq_basis_defect(const BiorthogonalSystem& sys, const FunctionRep& f,
                                          const FunctionRep& g, double decay_threshold) {
  for (const FunctionRep* h : {&f, &g}) {
    for (int sign : {1, -1}) {
      const double score = domain_decay_score(sys.Q, *h, sign, sys.grid);
      if (score < decay_threshold) {
        std::ostringstream os;
        os << "gq_basis_defect: test function fails the decay test for e^{"
           << (sign > 0 ? "+" : "-") << "Q/2} (score " << score << ")";
        fail(ErrorCode::domain, os.str());
      }
    }
  }
  const FunctionRep fc = sys.conform(f);
  const FunctionRep gc = sys.conform(g);
  const cplx exact = inner(fc, gc);
  cplx phi_first = 0.0, psi_first = 0.0;
  for (std::size_t n = 0; n < sys.N; ++n) {
    phi_first += inner(fc, sys.phi[n]) * inner(sys.psi[n], gc);
    psi_first += inner(fc, sys.psi[n]) * inner(sys.phi[n], gc);
  }
  return {std::abs(exact - phi_first), std::abs(exact - psi_first)};
}

std::pair<double, double> g0_quadratic_check(const BiorthogonalSystem& sys,
                                             std::span<const cplx> c) {
  if (c.empty() || c.size() > sys.N) {
    fail(ErrorCode::domain, "g0_quadratic_check: coefficient count must lie in [1, N]");
  }
  double squared = 0.0;
  for (cplx v : c) squared += std::norm(v);
  const FunctionRep f = linear_combination(c, sys.phi);
  const FunctionRep g0f = linear_combination(c, sys.psi);
  return {squared, inner(g0f, f).real()};
}

cplx weighted_inner(const MetricOperatorQ& Q, int sign, const FunctionRep& f,
                    const FunctionRep& g, const RulePtr& grid) {
  if (sign != 1 && sign != -1) fail(ErrorCode::domain, "weighted_inner: sign must be +1 or -1");
  return inner(apply_exp_q(Q, 0.5 * sign, f, grid), apply_exp_q(Q, 0.5 * sign, g, grid));
}

double weighted_norm(const MetricOperatorQ& Q, int sign, const FunctionRep& f,
                     const RulePtr& grid) {
  if (sign != 1 && sign != -1) fail(ErrorCode::domain, "weighted_norm: sign must be +1 or -1");
  return norm(apply_exp_q(Q, 0.5 * sign, f, grid));
}

ComplexMatrix weighted_gram(const MetricOperatorQ& Q, int sign, std::span<const FunctionRep> family,
                            const RulePtr& grid, bool parallel) {
  if (family.empty()) fail(ErrorCode::structure, "weighted_gram: empty family");
  std::vector<FunctionRep> mapped;
  mapped.reserve(family.size());
  for (const auto& f : family) mapped.push_back(apply_exp_q(Q, 0.5 * sign, f, grid));
  return gram_matrix(mapped, ProductKind::hilbert, parallel);
}

double weighted_orthonormality_defect(const BiorthogonalSystem& sys) {
  const std::vector<double> ones(sys.N, 1.0);
  const double phi_defect = weighted_gram(sys.Q, -1, sys.phi, sys.grid).defect_from_diagonal(ones);
  const double psi_defect = weighted_gram(sys.Q, 1, sys.psi, sys.grid).defect_from_diagonal(ones);
  return std::max(phi_defect, psi_defect);
}

double reconstruction_defect(const BiorthogonalSystem& sys) {
  double worst = 0.0;
  for (std::size_t n = 0; n < sys.N; ++n) {
    const FunctionRep back = apply_exp_q(sys.Q, -0.5, sys.phi[n], sys.grid);
    const FunctionRep e = back.is_samples() ? sys.basis_function(n).sample_on(back.rule())
                                            : FunctionRep::basis_vector(sys.basis, n);
    worst = std::max(worst, norm(back - e) / norm(e));
  }
  return worst;
}

} // namespace grslab
