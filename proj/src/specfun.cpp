#include "grslab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::pole: return "pole";
    case ErrorCode::magnitude: return "magnitude";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::structure: return "structure";
    case ErrorCode::resolution: return "resolution";
    case ErrorCode::grammar: return "grammar";
    case ErrorCode::not_j_orthonormal: return "not_j_orthonormal";
    case ErrorCode::io: return "io";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  const double y = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (y + static_cast<double>(i));
  }
  const double t = y + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (y + 0.5) * std::log(t) - t +
         std::log(sum);
}

} // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << "log_gamma: argument must be positive and finite, got " << x;
    fail(ErrorCode::domain, os.str());
  }
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
  return lanczos_log_gamma(x);
}

double hyp2f1_terminating(const Hyp2F1Terminating& p) {
  if (p.m < 0) fail(ErrorCode::domain, "hyp2f1_terminating: m must be nonnegative");
  double sum = 0.0;
  double term = 1.0;
  for (int k = 0; k <= p.m; ++k) {
    sum += term;
    if (k == p.m) break;
    const double num = (static_cast<double>(k) - p.m) * (p.b + k);
    if (num == 0.0) break; // series terminates early
    const double den = (p.c + k) * (k + 1.0);
    if (den == 0.0) {
      std::ostringstream os;
      os << "hyp2f1_terminating: (c)_k pole at k = " << k + 1 << " with c = " << p.c;
      fail(ErrorCode::pole, os.str());
    }
    term *= num / den * p.z;
  }
  if (!std::isfinite(sum)) fail(ErrorCode::magnitude, "hyp2f1_terminating: overflow");
  return sum;
}

std::complex<double> hermite_poly(int n, std::complex<double> z, int max_degree) {
  if (n < 0 || n > max_degree) {
    std::ostringstream os;
    os << "hermite_poly: degree " << n << " outside [0, " << max_degree << "]";
    fail(ErrorCode::domain, os.str());
  }
  std::complex<double> prev(1.0, 0.0);
  if (n == 0) return prev;
  std::complex<double> cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const std::complex<double> next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag())) {
      std::ostringstream os;
      os << "hermite_poly: H_" << k + 1 << "(" << z.real() << "+" << z.imag()
         << "i) overflows double precision";
      fail(ErrorCode::magnitude, os.str());
    }
  }
  return cur;
}

} // namespace grslab
