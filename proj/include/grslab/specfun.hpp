#pragma once

#include <complex>

namespace grslab {

/// Parameters of 2F1(-m, b; c; z), a polynomial of degree m in z.
struct Hyp2F1Terminating {
  int m = 0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

/// Natural log of the gamma function for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

/// Terminating Gauss hypergeometric series, summed term by term for k = 0..m.
/// Throws ErrorCode::pole when (c)_k vanishes before the numerator does.
double hyp2f1_terminating(const Hyp2F1Terminating& p);

inline constexpr int kDefaultMaxHermiteDegree = 512;

/// Physicists' Hermite polynomial H_n(z) by three-term recurrence.
/// Throws ErrorCode::magnitude instead of returning a non-finite value.
std::complex<double> hermite_poly(int n, std::complex<double> z,
                                  int max_degree = kDefaultMaxHermiteDegree);

} // namespace grslab
