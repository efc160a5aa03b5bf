#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "grslab/expr.hpp"
#include "grslab/grs.hpp"

namespace grslab {

/// H f = sum_{n<N} lambda_n <f, psi_n> phi_n (phi_psi) or
/// sum_{n<N} lambda_n <f, phi_n> psi_n (psi_phi).
struct SpectralHamiltonian {
  enum class Direction { phi_psi, psi_phi };

  std::vector<cplx> lambdas;
  std::shared_ptr<const BiorthogonalSystem> sys;
  Direction direction = Direction::phi_psi;

  /// Throws ErrorCode::structure unless lambdas.size() == sys->N.
  static SpectralHamiltonian make(std::vector<cplx> lambdas,
                                  std::shared_ptr<const BiorthogonalSystem> sys,
                                  Direction direction = Direction::phi_psi);
};

FunctionRep apply_spectral(const SpectralHamiltonian& H, const FunctionRep& f);

namespace hamiltonian_kind {
/// -d^2 + x^2 + 2iax
struct ShiftedHO {
  double a = 0.0;
};
/// (-d^2 - x d/dx + (3x^2/2 - 1)/2) / 2
struct Example1 {};
/// (-d^2 + x d/dx + (3x^2/2 + 1)/2) / 2
struct Example1Adjoint {};
/// -d^2 + |x|^beta + 2p' d/dx + p'' - p'^2
struct PerturbedAnharmonic {
  double beta = 4.0;
  Expr p;
};
/// -d^2 + |x|^beta
struct Anharmonic {
  double beta = 4.0;
};
} // namespace hamiltonian_kind

using HamiltonianKind =
    std::variant<hamiltonian_kind::ShiftedHO, hamiltonian_kind::Example1,
                 hamiltonian_kind::Example1Adjoint, hamiltonian_kind::PerturbedAnharmonic,
                 hamiltonian_kind::Anharmonic>;

/// Tridiagonal central-difference matrix on a uniform grid with Dirichlet
/// ends: row j is sub[j] f_{j-1} + diag[j] f_j + sup[j] f_{j+1}.
struct DifferentialHamiltonian {
  HamiltonianKind kind;
  RulePtr grid;
  std::vector<cplx> sub;
  std::vector<cplx> diag;
  std::vector<cplx> sup;

  std::vector<cplx> apply(std::span<const cplx> f) const;
  /// Real diagonal and sub = conj(sup) of the next row, exactly.
  bool is_hermitian() const;
};

inline constexpr int kMinFdPoints = 500;

/// Throws ErrorCode::domain for a non-uniform or too coarse grid.
DifferentialHamiltonian fd_matrix(const HamiltonianKind& kind, RulePtr grid);

inline constexpr double kBoundaryMass = 1e-8;

/// ||H f - lambda f||_2 / ||f||_2 over interior nodes. f is sampled on the
/// matrix grid; throws ErrorCode::resolution when |f| at either end exceeds
/// kBoundaryMass * max|f|.
double eigen_residual(const DifferentialHamiltonian& H, const FunctionRep& f, cplx lambda);

} // namespace grslab
