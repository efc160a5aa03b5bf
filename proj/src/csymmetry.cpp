#include "grslab/csymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::first_type: return "first_type";
    case Verdict::not_j_orthonormal: return "not_j_orthonormal";
    case Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::first_type, Verdict::not_j_orthonormal, Verdict::undetermined}) {
    if (name == to_string(v)) return v;
  }
  fail(ErrorCode::usage, "unknown verdict '" + std::string(name) + "'");
}

CSymmetryOp CSymmetryOp::make(const MetricOperatorQ& Q, RulePtr grid) {
  const auto result = anticommutes_with_parity(Q);
  if (result.answer != Answer::yes) {
    fail(ErrorCode::structure, "CSymmetryOp: " + Q.describe() + " does not anticommute with parity");
  }
  return CSymmetryOp(Q, std::move(grid));
}

double j_orthonormality_defect(const BiorthogonalSystem& sys) {
  double worst = 0.0;
  for (std::size_t n = 0; n < sys.N; ++n) {
    const FunctionRep jphi = apply_parity(sys.phi[n]);
    for (std::size_t m = 0; m < sys.N; ++m) {
      const double target = n == m ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(std::abs(inner(jphi, sys.phi[m])) - target));
    }
  }
  return worst;
}

std::vector<int> sign_sequence(const BiorthogonalSystem& sys, double tol) {
  const double defect = j_orthonormality_defect(sys);
  if (defect > tol) {
    std::ostringstream os;
    os << "sign_sequence: J-orthonormality defect " << defect << " exceeds " << tol;
    fail(ErrorCode::not_j_orthonormal, os.str());
  }
  std::vector<int> signs;
  for (std::size_t n = 0; n < sys.N; ++n) {
    const cplx d = krein_inner(sys.phi[n], sys.phi[n]);
    const int s = d.real() >= 0.0 ? 1 : -1;
    if (std::abs(d - cplx(s)) > tol) {
      std::ostringstream os;
      os << "sign_sequence: [phi_" << n << ", phi_" << n << "] = " << d.real() << "+" << d.imag()
         << "i is not unimodular";
      fail(ErrorCode::not_j_orthonormal, os.str());
    }
    signs.push_back(s);
  }
  return signs;
}

double partner_check(const BiorthogonalSystem& sys, const std::vector<int>& signs) {
  if (signs.size() < sys.N) fail(ErrorCode::structure, "partner_check: sign sequence too short");
  double worst = 0.0;
  for (std::size_t n = 0; n < sys.N; ++n) {
    const FunctionRep partner = static_cast<double>(signs[n]) * apply_parity(sys.phi[n]);
    worst = std::max(worst, norm(sys.psi[n] - partner) / norm(sys.psi[n]));
  }
  return worst;
}

bool basis_parity_check(const BasisSet& basis, double tol) {
  for (std::size_t n = 0; n < basis.size; ++n) {
    const int expected = n % 2 == 0 ? 1 : -1;
    if (basis.parity_signs.size() <= n || basis.parity_signs[n] != expected) return false;
  }
  if (basis.kind == BasisSet::Kind::hermite_analytic) return true;
  if (!basis.grid->symmetric()) return false;
  for (std::size_t n = 0; n < basis.size; ++n) {
    const auto& v = basis.vectors[n];
    const std::size_t p = v.size();
    double vmax = 0.0, mismatch = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      vmax = std::max(vmax, std::abs(v[j]));
      mismatch = std::max(mismatch, std::abs(v[p - 1 - j] - basis.parity_signs[n] * v[j]));
    }
    if (mismatch > tol * vmax) return false;
  }
  return true;
}

TypeClassification classify_type(const BiorthogonalSystem& sys, double tol) {
  TypeClassification out;
  out.j_defect = j_orthonormality_defect(sys);
  std::vector<FunctionRep> tests;
  for (std::size_t n = 0; n < std::min<std::size_t>(sys.N, 6); ++n) {
    tests.push_back(FunctionRep::basis_vector(sys.basis, n));
  }
  const auto anti = anticommutes_with_parity(sys.Q, tests);
  out.anticommutation_evidence = anti.evidence.value_or(-1.0);
  out.basis_parity_ok = basis_parity_check(*sys.basis);
  if (out.j_defect > tol) {
    out.verdict = Verdict::not_j_orthonormal;
  } else if (anti.answer == Answer::yes && out.basis_parity_ok) {
    out.verdict = Verdict::first_type;
  } else {
    out.verdict = Verdict::undetermined;
  }
  return out;
}

FunctionRep apply_c(const CSymmetryOp& C, const FunctionRep& f) {
  return apply_exp_q(C.Q(), 1.0, apply_parity(f), C.grid());
}

cplx c_inner(const CSymmetryOp& C, const FunctionRep& f, const FunctionRep& g) {
  const FunctionRep cf = apply_c(C, f);
  return krein_inner(cf, cf.is_samples() && g.is_coefficients() ? g.sample_on(cf.rule()) : g);
}

std::pair<FunctionRep, FunctionRep> fundamental_split(const CSymmetryOp& C, const FunctionRep& f) {
  const FunctionRep cf = apply_c(C, f);
  const FunctionRep base = cf.is_samples() && f.is_coefficients() ? f.sample_on(cf.rule()) : f;
  return {0.5 * (base + cf), 0.5 * (base - cf)};
}

cplx split_inner(const CSymmetryOp& C, const FunctionRep& f, const FunctionRep& g) {
  const auto [fp, fm] = fundamental_split(C, f);
  const auto [gp, gm] = fundamental_split(C, g);
  return krein_inner(fp, gp) - krein_inner(fm, gm);
}

double expansion_residual(const BiorthogonalSystem& sys, const CSymmetryOp& C,
                          const FunctionRep& f, std::size_t M, const std::vector<int>& signs) {
  if (M > sys.N || signs.size() < M) {
    fail(ErrorCode::domain, "expansion_residual: M exceeds the truncation or the sign sequence");
  }
  const FunctionRep fc = sys.conform(f);
  std::vector<cplx> c(M);
  for (std::size_t n = 0; n < M; ++n) c[n] = static_cast<double>(signs[n]) * krein_inner(fc, sys.phi[n]);
  const FunctionRep approx = M == 0 ? cplx(0.0) * fc
                                    : linear_combination(c, std::span(sys.phi).first(M));
  return weighted_norm(C.Q(), -1, fc - approx, C.grid());
}

} // namespace grslab
