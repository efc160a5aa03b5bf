#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grslab/krein.hpp"
#include "grslab/metric.hpp"

namespace grslab {

/// Dual generalized Riesz systems phi_n = e^{Q/2} e_n, psi_n = e^{-Q/2} e_n,
/// truncated to n < N.
struct BiorthogonalSystem {
  BasisPtr basis;
  MetricOperatorQ Q;
  std::size_t N = 0;
  std::vector<FunctionRep> phi;
  std::vector<FunctionRep> psi;
  std::optional<std::vector<int>> signs;
  /// Grid used to realize Multiplication generators (basis grid if null).
  RulePtr grid;
  /// Smallest domain_decay_score seen over e_n, n < N, both signs.
  double min_decay_score = 1.0;

  /// f converted to the representation of the families (coefficient forms
  /// are sampled when the families are sampled).
  FunctionRep conform(const FunctionRep& f) const;
  /// e_n in the representation of the families.
  FunctionRep basis_function(std::size_t n) const;
  /// phi_n and psi_n rebuilt as samples on another grid.
  FunctionRep phi_on(std::size_t n, const RulePtr& rule) const;
  FunctionRep psi_on(std::size_t n, const RulePtr& rule) const;
};

struct BuildOptions {
  double decay_threshold = 0.9;
  RulePtr grid;
};

/// Throws ErrorCode::domain naming n and the sign when some e_n fails the
/// decay threshold.
BiorthogonalSystem build_system(const MetricOperatorQ& Q, BasisPtr basis, std::size_t N,
                                const BuildOptions& options = {});

/// max_{n,m<N} |<phi_n, psi_m> - delta_nm|
double biorthogonality_defect(const BiorthogonalSystem& sys);

/// Both orderings of the truncated resolution of the identity:
/// |<f,g> - sum <f,phi_n><psi_n,g>| and |<f,g> - sum <f,psi_n><phi_n,g>|.
std::pair<double, double> gq_basis_defect(const BiorthogonalSystem& sys, const FunctionRep& f,
                                          const FunctionRep& g, double decay_threshold = 0.9);

/// (sum |c_n|^2, <sum c_n psi_n, sum c_m phi_m>.real) for the operator G_0
/// mapping phi_n to psi_n.
std::pair<double, double> g0_quadratic_check(const BiorthogonalSystem& sys,
                                             std::span<const cplx> c);

/// <e^{sign Q/2} f, e^{sign Q/2} g>, i.e. <f,g>_{-Q} for sign -1 and
/// <f,g>_Q for sign +1, evaluated in factored form.
cplx weighted_inner(const MetricOperatorQ& Q, int sign, const FunctionRep& f,
                    const FunctionRep& g, const RulePtr& grid = nullptr);

/// Norm induced by weighted_inner.
double weighted_norm(const MetricOperatorQ& Q, int sign, const FunctionRep& f,
                     const RulePtr& grid = nullptr);

/// Gram matrix for the weighted product.
ComplexMatrix weighted_gram(const MetricOperatorQ& Q, int sign, std::span<const FunctionRep> family,
                            const RulePtr& grid = nullptr, bool parallel = false);

/// max over {phi} in <.,.>_{-Q} and {psi} in <.,.>_Q of |G_nm - delta_nm|.
double weighted_orthonormality_defect(const BiorthogonalSystem& sys);

/// max_n ||e^{-Q/2} phi_n - e_n|| / ||e_n||.
double reconstruction_defect(const BiorthogonalSystem& sys);

} // namespace grslab
