#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "grslab/specfun.hpp"
#include "test_util.hpp"

using namespace grslab;
using test_util::code_of;

TEST_CASE("log_gamma spot values") {
  CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(std::numbers::pi))).epsilon(1e-14));
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-14);
  CHECK(log_gamma(2.5) == doctest::Approx(std::log(3.0 * std::sqrt(std::numbers::pi) / 4.0)).epsilon(1e-14));
  CHECK(log_gamma(2.5) == doctest::Approx(0.2846828705).epsilon(1e-9));
}

TEST_CASE("log_gamma against the C library on [0.5, 170]") {
  double worst = 0.0;
  for (double x = 0.5; x <= 170.0; x += 0.0625) {
    const double ref = std::lgamma(x);
    const double err = std::abs(log_gamma(x) - ref);
    // Relative error is meaningless next to the zeros at x = 1 and x = 2.
    const double scaled = err / std::max(1.0, std::abs(ref));
    worst = std::max(worst, scaled);
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("log_gamma recurrence") {
  for (double x = 0.5; x <= 20.5; x += 1.0) {
    const double ratio = std::exp(log_gamma(x + 1.0)) / std::exp(log_gamma(x));
    CHECK(ratio == doctest::Approx(x).epsilon(1e-11));
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1e-3, 60.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(log_gamma(x + 1.0) - log_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK(code_of([] { log_gamma(0.0); }) == ErrorCode::domain);
  CHECK(code_of([] { log_gamma(-2.5); }) == ErrorCode::domain);
  CHECK(code_of([] { log_gamma(std::nan("")); }) == ErrorCode::domain);
}

TEST_CASE("hyp2f1_terminating series values") {
  CHECK(hyp2f1_terminating({0, 7.0, 0.5, 1.5}) == 1.0);
  for (double n : {1.0, 2.0, -3.0}) {
    for (double c : {0.5, -1.5, 3.0}) {
      const double z = 1.5;
      CHECK(hyp2f1_terminating({1, n, c, z}) == doctest::Approx(1.0 - n * z / c).epsilon(1e-15));
    }
  }
  // 1 + (-2)(1)/(-1.5) 1.5 + (-2)(-1)(1)(2)/((-1.5)(-0.5) 2!) 1.5^2 = 1 + 2 + 6
  CHECK(hyp2f1_terminating({2, 1.0, -1.5, 1.5}) == doctest::Approx(9.0).epsilon(1e-15));
}

TEST_CASE("hyp2f1_terminating at z = 0 and Chu-Vandermonde at z = 1") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.25, 6.0);
  for (int i = 0; i < 50; ++i) {
    const int m = i % 12;
    const double b = u(rng), c = u(rng);
    CHECK(hyp2f1_terminating({m, b, c, 0.0}) == 1.0);
    // 2F1(-m, b; c; 1) = (c - b)_m / (c)_m
    double expected = 1.0;
    for (int k = 0; k < m; ++k) expected *= (c - b + k) / (c + k);
    // Cancellation between terms: compare against the sum of their moduli.
    double term = 1.0, moduli = 1.0;
    for (int k = 0; k < m; ++k) {
      term *= std::abs((k - m) * (b + k) / ((c + k) * (k + 1.0)));
      moduli += term;
    }
    CHECK(std::abs(hyp2f1_terminating({m, b, c, 1.0}) - expected) <= 1e-14 * moduli);
  }
}

TEST_CASE("hyp2f1_terminating pole") {
  CHECK(code_of([] { hyp2f1_terminating({2, 1.0, -1.0, 0.5}); }) == ErrorCode::pole);
  CHECK(code_of([] { hyp2f1_terminating({1, 1.0, 0.0, 0.5}); }) == ErrorCode::pole);
  // A degree-1 series never reaches the pole of (c)_k at k = 2.
  CHECK(hyp2f1_terminating({1, 1.0, -2.0, 0.5}) == doctest::Approx(1.25));
  CHECK(code_of([] { hyp2f1_terminating({-1, 1.0, 1.0, 0.5}); }) == ErrorCode::domain);
}

TEST_CASE("hermite_poly values") {
  CHECK(hermite_poly(0, {3.7, -1.0}) == std::complex<double>(1.0));
  CHECK(hermite_poly(1, 0.8) == std::complex<double>(1.6));
  CHECK(hermite_poly(3, 2.0) == std::complex<double>(40.0));
  const std::complex<double> z(0.3, -1.2);
  CHECK(std::abs(hermite_poly(3, z) - (8.0 * z * z * z - 12.0 * z)) <= 1e-13);
  const auto z2 = z * z;
  CHECK(std::abs(hermite_poly(4, z) - (16.0 * z2 * z2 - 48.0 * z2 + 12.0)) <= 1e-12);
}

TEST_CASE("hermite_poly recurrence and parity on random points") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    for (int n = 1; n < 40; ++n) {
      const double hp = hermite_poly(n + 1, x).real();
      const double h = hermite_poly(n, x).real();
      const double hm = hermite_poly(n - 1, x).real();
      const double scale = std::max({std::abs(hp), std::abs(2.0 * x * h), std::abs(2.0 * n * hm)});
      CHECK(std::abs(hp - 2.0 * x * h + 2.0 * n * hm) <= 1e-12 * scale);
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(std::abs(hermite_poly(n, -x).real() - sign * h) <= 1e-12 * std::max(1.0, std::abs(h)));
    }
  }
}

TEST_CASE("hermite_poly overflow and degree limit") {
  CHECK(code_of([] { hermite_poly(500, 1e3); }) == ErrorCode::magnitude);
  CHECK(code_of([] { hermite_poly(513, 0.1); }) == ErrorCode::domain);
  CHECK(code_of([] { hermite_poly(-1, 0.1); }) == ErrorCode::domain);
}
