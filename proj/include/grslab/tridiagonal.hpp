#pragma once

#include <span>
#include <vector>

namespace grslab {

/// Real symmetric tridiagonal matrix: diag[0..n), off[0..n-1) with
/// off[i] coupling rows i and i+1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// All eigenvalues, ascending, by implicit QL with Wilkinson shifts.
/// Throws ErrorCode::numeric if an eigenvalue fails to converge in 60 sweeps.
std::vector<double> tridiagonal_eigenvalues(const SymTridiagonal& t);

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t sturm_count(const SymTridiagonal& t, double x);

struct TridiagonalEigenpairs {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // unit 2-norm
};

/// Lowest k eigenpairs: bisection on the Sturm count followed by inverse
/// iteration. Intended for well-separated spectra (Schroedinger operators).
TridiagonalEigenpairs tridiagonal_lowest(const SymTridiagonal& t, std::size_t k);

} // namespace grslab
