#include "grslab/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

SpectralHamiltonian SpectralHamiltonian::make(std::vector<cplx> lambdas,
                                              std::shared_ptr<const BiorthogonalSystem> sys,
                                              Direction direction) {
  if (!sys) fail(ErrorCode::structure, "SpectralHamiltonian: null system");
  if (lambdas.size() != sys->N) {
    std::ostringstream os;
    os << "SpectralHamiltonian: " << lambdas.size() << " eigenvalues for N = " << sys->N;
    fail(ErrorCode::structure, os.str());
  }
  return SpectralHamiltonian{std::move(lambdas), std::move(sys), direction};
}

FunctionRep apply_spectral(const SpectralHamiltonian& H, const FunctionRep& f) {
  const BiorthogonalSystem& sys = *H.sys;
  const bool phi_psi = H.direction == SpectralHamiltonian::Direction::phi_psi;
  const auto& out_family = phi_psi ? sys.phi : sys.psi;
  const auto& in_family = phi_psi ? sys.psi : sys.phi;
  const FunctionRep fc = sys.conform(f);
  std::vector<cplx> c(sys.N);
  for (std::size_t n = 0; n < sys.N; ++n) c[n] = H.lambdas[n] * inner(fc, in_family[n]);
  return linear_combination(c, out_family);
}

std::vector<cplx> DifferentialHamiltonian::apply(std::span<const cplx> f) const {
  const std::size_t p = diag.size();
  if (f.size() != p) fail(ErrorCode::structure, "DifferentialHamiltonian: size mismatch");
  std::vector<cplx> out(p);
  for (std::size_t j = 0; j < p; ++j) {
    cplx v = diag[j] * f[j];
    if (j > 0) v += sub[j] * f[j - 1];
    if (j + 1 < p) v += sup[j] * f[j + 1];
    out[j] = v;
  }
  return out;
}

bool DifferentialHamiltonian::is_hermitian() const {
  const std::size_t p = diag.size();
  for (std::size_t j = 0; j < p; ++j) {
    if (diag[j].imag() != 0.0) return false;
    if (j + 1 < p && sub[j + 1] != std::conj(sup[j])) return false;
  }
  return true;
}

DifferentialHamiltonian fd_matrix(const HamiltonianKind& kind, RulePtr grid) {
  if (!grid || grid->kind != QuadratureRule::Kind::uniform_trapezoid) {
    fail(ErrorCode::domain, "fd_matrix: needs a uniform grid");
  }
  if (grid->size() < static_cast<std::size_t>(kMinFdPoints)) {
    std::ostringstream os;
    os << "fd_matrix: " << grid->size() << " points, need at least " << kMinFdPoints;
    fail(ErrorCode::domain, os.str());
  }
  const std::size_t p = grid->size();
  const double h = grid->spacing();
  const double inv_h2 = 1.0 / (h * h);
  const auto& x = grid->nodes;

  DifferentialHamiltonian H{kind, grid, std::vector<cplx>(p), std::vector<cplx>(p),
                            std::vector<cplx>(p)};
  // -d^2/dx^2
  for (std::size_t j = 0; j < p; ++j) {
    H.sub[j] = -inv_h2;
    H.diag[j] = 2.0 * inv_h2;
    H.sup[j] = -inv_h2;
  }
  // c(x) d/dx
  auto add_first_derivative = [&](std::size_t j, double c) {
    H.sub[j] -= c / (2.0 * h);
    H.sup[j] += c / (2.0 * h);
  };
  auto scale_all = [&](double s) {
    for (std::size_t j = 0; j < p; ++j) {
      H.sub[j] *= s;
      H.diag[j] *= s;
      H.sup[j] *= s;
    }
  };

  std::visit(overloaded{
                 [&](const hamiltonian_kind::ShiftedHO& k) {
                   for (std::size_t j = 0; j < p; ++j) {
                     H.diag[j] += cplx(x[j] * x[j], 2.0 * k.a * x[j]);
                   }
                 },
                 [&](const hamiltonian_kind::Example1&) {
                   for (std::size_t j = 0; j < p; ++j) {
                     add_first_derivative(j, -x[j]);
                     H.diag[j] += 0.5 * (1.5 * x[j] * x[j] - 1.0);
                   }
                   scale_all(0.5);
                 },
                 [&](const hamiltonian_kind::Example1Adjoint&) {
                   for (std::size_t j = 0; j < p; ++j) {
                     add_first_derivative(j, x[j]);
                     H.diag[j] += 0.5 * (1.5 * x[j] * x[j] + 1.0);
                   }
                   scale_all(0.5);
                 },
                 [&](const hamiltonian_kind::PerturbedAnharmonic& k) {
                   for (std::size_t j = 0; j < p; ++j) {
                     const Jet jp = k.p.jet(x[j]);
                     H.diag[j] += std::pow(std::abs(x[j]), k.beta) + jp.d2 - jp.d1 * jp.d1;
                     add_first_derivative(j, 2.0 * jp.d1);
                   }
                 },
                 [&](const hamiltonian_kind::Anharmonic& k) {
                   for (std::size_t j = 0; j < p; ++j) H.diag[j] += std::pow(std::abs(x[j]), k.beta);
                 },
             },
             kind);
  H.sub[0] = 0.0;
  H.sup[p - 1] = 0.0;
  return H;
}

double eigen_residual(const DifferentialHamiltonian& H, const FunctionRep& f, cplx lambda) {
  const FunctionRep s = f.sample_on(H.grid);
  auto v = s.samples();
  const std::size_t p = v.size();
  double vmax = 0.0;
  for (cplx z : v) vmax = std::max(vmax, std::abs(z));
  const double ends = std::max(std::abs(v.front()), std::abs(v.back()));
  if (ends > kBoundaryMass * vmax) {
    std::ostringstream os;
    os << "eigen_residual: boundary value " << ends << " exceeds " << kBoundaryMass
       << " * max|f|; widen the grid";
    fail(ErrorCode::resolution, os.str());
  }
  const std::vector<cplx> hv = H.apply(v);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 1; j + 1 < p; ++j) {
    num += std::norm(hv[j] - lambda * v[j]);
    den += std::norm(v[j]);
  }
  if (den == 0.0) fail(ErrorCode::domain, "eigen_residual: zero function");
  return std::sqrt(num / den);
}

} // namespace grslab
