#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace grslab {

using cplx = std::complex<double>;

/// Nodes and weights for integrating sampled functions.
///
/// `weights` integrate against the rule's own weight function
/// (e^{-scale x^2} for Gauss-Hermite, 1 for the trapezoid rule), while
/// `dx_weights` integrate plain samples: sum dx_weights[i] f(x_i) ~ int f dx.
/// For Gauss-Hermite rules dx_weights[i] = weights[i] e^{scale x_i^2}, which
/// stays representable even where weights[i] underflows.
struct QuadratureRule {
  enum class Kind { gauss_hermite, uniform_trapezoid };

  Kind kind = Kind::gauss_hermite;
  double scale = 1.0;      // gauss_hermite only
  double half_width = 0.0; // uniform_trapezoid only
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> dx_weights;

  std::size_t size() const { return nodes.size(); }
  /// Grid spacing of a uniform rule.
  double spacing() const;
  /// True when nodes[i] == -nodes[n-1-i] exactly.
  bool symmetric() const;
};

using RulePtr = std::shared_ptr<const QuadratureRule>;

/// Golub-Welsch nodes for weight e^{-scale x^2}, Newton-polished, with
/// Christoffel weights evaluated through normalized Hermite functions.
QuadratureRule gauss_hermite_rule(int order, double scale = 1.0);

/// `points` equispaced nodes on [-half_width, half_width], trapezoid weights.
QuadratureRule uniform_rule(double half_width, int points);

inline constexpr int kDefaultMaxDegree = 512;
inline constexpr double kDefaultMaxImag = 4.0;

/// Normalized Hermite function e_n(z) = (2^n n! sqrt(pi))^{-1/2} H_n(z) e^{-z^2/2}.
cplx hermite_function(int n, cplx z, double max_imag = kDefaultMaxImag);

/// e_0(z) .. e_n(z) in one recurrence sweep, with log-scaling so that neither
/// e^{-z^2/2} underflow nor polynomial growth loses the result.
std::vector<cplx> hermite_functions(int n, cplx z, double max_imag = kDefaultMaxImag);

/// Real-argument variant used for quadrature construction.
std::vector<double> hermite_functions_real(int n, double x);

/// Orthonormal basis {e_n}. Hermite bases are analytic (evaluable at complex
/// arguments); anharmonic bases are eigenvectors sampled on a uniform grid.
struct BasisSet {
  enum class Kind { hermite_analytic, anharmonic_numeric };

  Kind kind = Kind::hermite_analytic;
  std::size_t size = 0;
  std::vector<int> parity_signs;
  std::vector<double> energies;             // anharmonic only
  double beta = 0.0;                        // anharmonic only
  RulePtr grid;                             // working grid for sampled products
  std::vector<std::vector<double>> vectors; // anharmonic only, samples on grid
  double max_imag = kDefaultMaxImag;        // hermite only, bound on |Im z|
};

using BasisPtr = std::shared_ptr<const BasisSet>;

/// Default Gauss-Hermite order for products of degree-N functions.
inline int default_quad_order(std::size_t n) { return 2 * static_cast<int>(n) + 40; }

/// Hermite basis of the given size; quad_order <= 0 selects default_quad_order.
BasisPtr hermite_basis(std::size_t size, int quad_order = 0,
                       double max_imag = kDefaultMaxImag);

/// Lowest k eigenfunctions of -d^2/dx^2 + |x|^beta, central differences with
/// Dirichlet ends on a symmetric uniform grid.
BasisPtr anharmonic_eigenbasis(double beta, RulePtr grid, std::size_t k);

/// Half-width heuristic for grids resolving Hermite functions up to index n.
inline double default_half_width(std::size_t n) {
  return std::sqrt(2.0 * static_cast<double>(n) + 1.0) + 6.0;
}

} // namespace grslab
