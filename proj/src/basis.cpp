#include "grslab/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "grslab/error.hpp"
#include "grslab/tridiagonal.hpp"

namespace grslab {

namespace {

constexpr double kRescale = 1e100;
const double kLogRescale = std::log(kRescale);
const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

// exp(log_scale) * m without intermediate over/underflow.
template <typename T>
T scaled_value(T m, double log_scale) {
  const double mag = std::abs(m);
  if (mag == 0.0) return T(0.0);
  const double log_mag = log_scale + std::log(mag);
  if (log_mag > 709.0) {
    std::ostringstream os;
    os << "hermite function value e^" << log_mag << " exceeds double range";
    fail(ErrorCode::magnitude, os.str());
  }
  return (m / mag) * std::exp(log_mag);
}

template <typename T>
std::vector<T> hermite_sweep(int n, T z, T start, double log_scale) {
  std::vector<T> out(static_cast<std::size_t>(n) + 1);
  T prev = start;
  out[0] = scaled_value(prev, log_scale);
  if (n == 0) return out;
  T cur = std::sqrt(2.0) * z * prev;
  out[1] = scaled_value(cur, log_scale);
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    T next = z * std::sqrt(2.0 / (kk + 1.0)) * cur - std::sqrt(kk / (kk + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += kLogRescale;
    }
    out[static_cast<std::size_t>(k) + 1] = scaled_value(cur, log_scale);
  }
  return out;
}

} // namespace

double QuadratureRule::spacing() const {
  if (kind != Kind::uniform_trapezoid || nodes.size() < 2) {
    fail(ErrorCode::structure, "spacing: rule is not a uniform grid");
  }
  return 2.0 * half_width / static_cast<double>(nodes.size() - 1);
}

bool QuadratureRule::symmetric() const {
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes[i] != -nodes[n - 1 - i]) return false;
  }
  return true;
}

std::vector<cplx> hermite_functions(int n, cplx z, double max_imag) {
  if (n < 0) fail(ErrorCode::domain, "hermite_functions: negative degree");
  if (std::abs(z.imag()) > max_imag) {
    std::ostringstream os;
    os << "hermite_functions: |Im z| = " << std::abs(z.imag()) << " exceeds bound " << max_imag;
    fail(ErrorCode::magnitude, os.str());
  }
  const double x = z.real(), y = z.imag();
  // e^{-z^2/2} = e^{-(x^2-y^2)/2} e^{-ixy}; the modulus goes into the log scale.
  const cplx start = kPiQuarter * std::polar(1.0, -x * y);
  return hermite_sweep<cplx>(n, z, start, -0.5 * (x * x - y * y));
}

std::vector<double> hermite_functions_real(int n, double x) {
  if (n < 0) fail(ErrorCode::domain, "hermite_functions_real: negative degree");
  return hermite_sweep<double>(n, x, kPiQuarter, -0.5 * x * x);
}

cplx hermite_function(int n, cplx z, double max_imag) {
  if (n < 0 || n > kDefaultMaxDegree) {
    std::ostringstream os;
    os << "hermite_function: index " << n << " outside [0, " << kDefaultMaxDegree << "]";
    fail(ErrorCode::domain, os.str());
  }
  return hermite_functions(n, z, max_imag).back();
}

QuadratureRule gauss_hermite_rule(int order, double scale) {
  if (order < 1 || order > 1024) {
    std::ostringstream os;
    os << "gauss_hermite_rule: order " << order << " outside [1, 1024]";
    fail(ErrorCode::domain, os.str());
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    fail(ErrorCode::domain, "gauss_hermite_rule: scale must be positive");
  }
  const auto q = static_cast<std::size_t>(order);

  SymTridiagonal jacobi;
  jacobi.diag.assign(q, 0.0);
  for (std::size_t k = 1; k < q; ++k) jacobi.off.push_back(std::sqrt(0.5 * static_cast<double>(k)));
  std::vector<double> x = tridiagonal_eigenvalues(jacobi);

  // Enforce exact mirror symmetry, then polish the nonnegative half.
  for (std::size_t i = 0; i < q / 2; ++i) {
    const double a = 0.5 * (x[q - 1 - i] - x[i]);
    x[i] = -a;
    x[q - 1 - i] = a;
  }
  if (q % 2 == 1) x[q / 2] = 0.0;
  const double root2q = std::sqrt(2.0 * static_cast<double>(q));
  for (std::size_t i = (q + 1) / 2; i < q; ++i) {
    for (int it = 0; it < 3; ++it) {
      const auto e = hermite_functions_real(order, x[i]);
      const double deriv = root2q * e[q - 1] - x[i] * e[q];
      if (deriv == 0.0) break;
      const double step = e[q] / deriv;
      x[i] -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x[i]))) break;
    }
    x[q - 1 - i] = -x[i];
  }

  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_hermite;
  rule.scale = scale;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  rule.dx_weights.resize(q);
  const double inv_root_scale = 1.0 / std::sqrt(scale);
  for (std::size_t i = 0; i < q; ++i) {
    // Christoffel number for weight e^{-x^2}: 1 / (q p_{q-1}(x)^2), and
    // p_{q-1}(x)^2 = e_{q-1}(x)^2 e^{x^2}.
    const double e_prev = hermite_functions_real(order - 1, x[i]).back();
    const double log_dx = -std::log(static_cast<double>(q) * e_prev * e_prev);
    rule.nodes[i] = x[i] * inv_root_scale;
    rule.dx_weights[i] = std::exp(log_dx) * inv_root_scale;
    rule.weights[i] = std::exp(log_dx - x[i] * x[i]) * inv_root_scale;
  }
  return rule;
}

QuadratureRule uniform_rule(double half_width, int points) {
  if (!(half_width > 0.0) || points < 2) {
    fail(ErrorCode::domain, "uniform_rule: need half_width > 0 and at least 2 points");
  }
  const auto p = static_cast<std::size_t>(points);
  const double h = 2.0 * half_width / static_cast<double>(p - 1);
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::uniform_trapezoid;
  rule.half_width = half_width;
  rule.nodes.resize(p);
  for (std::size_t i = 0; i < (p + 1) / 2; ++i) {
    const double v = -half_width + static_cast<double>(i) * h;
    rule.nodes[i] = v;
    rule.nodes[p - 1 - i] = -v;
  }
  if (p % 2 == 1) rule.nodes[p / 2] = 0.0;
  rule.weights.assign(p, h);
  rule.weights.front() = rule.weights.back() = 0.5 * h;
  rule.dx_weights = rule.weights;
  return rule;
}

BasisPtr hermite_basis(std::size_t size, int quad_order, double max_imag) {
  if (size == 0 || size > static_cast<std::size_t>(kDefaultMaxDegree) + 1) {
    fail(ErrorCode::domain, "hermite_basis: size outside [1, 513]");
  }
  auto basis = std::make_shared<BasisSet>();
  basis->kind = BasisSet::Kind::hermite_analytic;
  basis->size = size;
  basis->max_imag = max_imag;
  for (std::size_t n = 0; n < size; ++n) basis->parity_signs.push_back(n % 2 == 0 ? 1 : -1);
  const int order = quad_order > 0 ? quad_order : default_quad_order(size);
  basis->grid = std::make_shared<const QuadratureRule>(gauss_hermite_rule(order, 1.0));
  return basis;
}

BasisPtr anharmonic_eigenbasis(double beta, RulePtr grid, std::size_t k) {
  if (!(beta > 2.0)) fail(ErrorCode::domain, "anharmonic_eigenbasis: beta must exceed 2");
  if (!grid || grid->kind != QuadratureRule::Kind::uniform_trapezoid || !grid->symmetric()) {
    fail(ErrorCode::structure, "anharmonic_eigenbasis: grid must be a symmetric uniform rule");
  }
  const std::size_t p = grid->size();
  if (k == 0 || k > p / 4) {
    fail(ErrorCode::domain, "anharmonic_eigenbasis: need 1 <= K <= points/4");
  }
  const double h = grid->spacing();
  const double inv_h2 = 1.0 / (h * h);

  SymTridiagonal op;
  op.diag.resize(p);
  for (std::size_t j = 0; j < p; ++j) op.diag[j] = 2.0 * inv_h2 + std::pow(std::abs(grid->nodes[j]), beta);
  op.off.assign(p - 1, -inv_h2);
  auto pairs = tridiagonal_lowest(op, k);

  auto basis = std::make_shared<BasisSet>();
  basis->kind = BasisSet::Kind::anharmonic_numeric;
  basis->size = k;
  basis->beta = beta;
  basis->grid = grid;
  basis->energies = pairs.values;
  for (std::size_t n = 0; n < k; ++n) {
    auto& v = pairs.vectors[n];
    double mass = 0.0;
    for (std::size_t j = 0; j < p; ++j) mass += grid->dx_weights[j] * v[j] * v[j];
    const double norm = std::sqrt(mass);
    double vmax = 0.0;
    for (double& x : v) {
      x /= norm;
      vmax = std::max(vmax, std::abs(x));
    }
    for (std::size_t j = p / 2; j < p; ++j) {
      if (std::abs(v[j]) > 1e-3 * vmax) {
        if (v[j] < 0.0) {
          for (double& x : v) x = -x;
        }
        break;
      }
    }
    const int sign = n % 2 == 0 ? 1 : -1;
    double mismatch = 0.0;
    for (std::size_t j = 0; j < p; ++j) mismatch = std::max(mismatch, std::abs(v[p - 1 - j] - sign * v[j]));
    if (mismatch > 1e-8 * vmax) {
      std::ostringstream os;
      os << "anharmonic_eigenbasis: eigenvector " << n << " violates parity by " << mismatch
         << "; refine the grid";
      fail(ErrorCode::resolution, os.str());
    }
    if (n > 0 && !(basis->energies[n] > basis->energies[n - 1])) {
      fail(ErrorCode::resolution, "anharmonic_eigenbasis: energies not strictly increasing");
    }
    basis->parity_signs.push_back(sign);
    basis->vectors.push_back(std::move(v));
  }
  return basis;
}

} // namespace grslab
