#pragma once

#include <utility>
#include <vector>

#include "grslab/grs.hpp"

namespace grslab {

inline constexpr double kKreinTol = 1e-6;

/// C = J e^{-Q} = e^{Q} J for a generator Q anticommuting with the parity.
class CSymmetryOp {
 public:
  /// Throws ErrorCode::structure unless anticommutes_with_parity(Q) is yes.
  static CSymmetryOp make(const MetricOperatorQ& Q, RulePtr grid = nullptr);

  const MetricOperatorQ& Q() const { return Q_; }
  const FundamentalSymmetry& J() const { return J_; }
  const RulePtr& grid() const { return grid_; }

 private:
  CSymmetryOp(MetricOperatorQ Q, RulePtr grid) : Q_(std::move(Q)), grid_(std::move(grid)) {}

  MetricOperatorQ Q_;
  FundamentalSymmetry J_;
  RulePtr grid_;
};

enum class Verdict { first_type, not_j_orthonormal, undetermined };
const char* to_string(Verdict v);
/// Accepts the names produced by to_string; throws ErrorCode::usage otherwise.
Verdict parse_verdict(std::string_view name);

struct TypeClassification {
  Verdict verdict = Verdict::undetermined;
  double j_defect = 0.0;
  /// Residual of JGf = G^{-1}Jf; negative when it could not be computed.
  double anticommutation_evidence = -1.0;
  bool basis_parity_ok = false;
};

/// max_{n,m<N} | |[phi_n, phi_m]| - delta_nm |
double j_orthonormality_defect(const BiorthogonalSystem& sys);

/// delta_n = round([phi_n, phi_n]); throws ErrorCode::not_j_orthonormal when
/// the family is not J-orthonormal within tol.
std::vector<int> sign_sequence(const BiorthogonalSystem& sys, double tol = kKreinTol);

/// max_n ||psi_n - delta_n J phi_n|| / ||psi_n||
double partner_check(const BiorthogonalSystem& sys, const std::vector<int>& signs);

/// True when J e_n = parity_signs[n] e_n for the stored basis (exact for
/// Hermite bases, grid reversal for numeric ones).
bool basis_parity_check(const BasisSet& basis, double tol = 1e-8);

/// J-orthonormality, then anticommutation of Q and the parity-eigenvector
/// property of the basis. Second type is never asserted.
TypeClassification classify_type(const BiorthogonalSystem& sys, double tol = kKreinTol);

/// C f = e^{Q} (J f)
FunctionRep apply_c(const CSymmetryOp& C, const FunctionRep& f);

/// [C f, g]
cplx c_inner(const CSymmetryOp& C, const FunctionRep& f, const FunctionRep& g);

/// (f_+, f_-) = ((I + C) f / 2, (I - C) f / 2)
std::pair<FunctionRep, FunctionRep> fundamental_split(const CSymmetryOp& C, const FunctionRep& f);

/// [f_+, g_+] - [f_-, g_-]
cplx split_inner(const CSymmetryOp& C, const FunctionRep& f, const FunctionRep& g);

/// || f - sum_{n<M} delta_n [f, phi_n] phi_n ||_{-Q}
double expansion_residual(const BiorthogonalSystem& sys, const CSymmetryOp& C,
                          const FunctionRep& f, std::size_t M, const std::vector<int>& signs);

} // namespace grslab
