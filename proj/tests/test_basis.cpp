#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grslab/basis.hpp"
#include "test_util.hpp"

using namespace grslab;
using test_util::code_of;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// int x^{2k} e^{-s x^2} dx = Gamma(k + 1/2) / s^{k + 1/2}
double gaussian_moment(int k, double s) {
  return std::tgamma(k + 0.5) / std::pow(s, k + 0.5);
}

} // namespace

TEST_CASE("one-point Gauss-Hermite rule") {
  const auto r = gauss_hermite_rule(1);
  REQUIRE(r.size() == 1);
  CHECK(r.nodes[0] == 0.0);
  CHECK(r.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-15));
}

TEST_CASE("Gauss-Hermite order 20 sums") {
  const auto r = gauss_hermite_rule(20);
  double s0 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    s0 += r.weights[i];
    s2 += r.weights[i] * r.nodes[i] * r.nodes[i];
  }
  CHECK(std::abs(s0 - kSqrtPi) <= 1e-13);
  CHECK(std::abs(s2 - kSqrtPi / 2.0) <= 1e-12);
}

TEST_CASE("Gauss-Hermite exactness on Gaussian moments") {
  for (double s : {1.0, 1.5, 0.5}) {
    for (int q : {1, 2, 5, 12, 30}) {
      const auto r = gauss_hermite_rule(q, s);
      for (int k = 0; 2 * k <= 2 * q - 1; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], 2 * k);
        CHECK(sum == doctest::Approx(gaussian_moment(k, s)).epsilon(1e-12));
        double odd = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) odd += r.weights[i] * std::pow(r.nodes[i], 2 * k + 1);
        CHECK(std::abs(odd) <= 1e-12 * (gaussian_moment(k, s) + gaussian_moment(k + 1, s)));
      }
    }
  }
}

TEST_CASE("Gauss-Hermite nodes and weights") {
  for (int q : {2, 3, 64, 200, 600}) {
    const auto r = gauss_hermite_rule(q);
    CHECK(r.symmetric());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r.nodes[i] < r.nodes[i + 1]);
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(r.dx_weights[i] > 0.0);
      CHECK(r.weights[i] >= 0.0);
      if (std::exp(-r.nodes[i] * r.nodes[i]) > 1e-250) CHECK(r.weights[i] > 0.0);
    }
  }
  CHECK(code_of([] { gauss_hermite_rule(0); }) == ErrorCode::domain);
  CHECK(code_of([] { gauss_hermite_rule(1025); }) == ErrorCode::domain);
  CHECK(code_of([] { gauss_hermite_rule(4, -1.0); }) == ErrorCode::domain);
}

TEST_CASE("uniform rule") {
  const auto r = uniform_rule(8.0, 2001);
  CHECK(r.symmetric());
  CHECK(r.spacing() == doctest::Approx(0.008));
  double s = 0.0;
  for (double w : r.dx_weights) s += w;
  CHECK(s == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(code_of([] { uniform_rule(1.0, 1); }) == ErrorCode::domain);
  CHECK(code_of([] { gauss_hermite_rule(4).spacing(); }) == ErrorCode::structure);
}

TEST_CASE("hermite_function closed forms") {
  const double pq = std::pow(std::numbers::pi, -0.25);
  CHECK(hermite_function(0, 0.0).real() == doctest::Approx(0.7511255444).epsilon(1e-10));
  CHECK(std::abs(hermite_function(1, 0.0)) == 0.0);
  for (double a : {0.25, 0.5, 1.0, 2.0}) {
    const cplx v = hermite_function(0, cplx(0.0, a));
    CHECK(std::abs(v - pq * std::exp(a * a / 2.0)) <= 1e-14 * std::exp(a * a / 2.0));
  }
  const cplx z(0.7, -0.4);
  const cplx e0 = pq * std::exp(-z * z / 2.0);
  CHECK(std::abs(hermite_function(0, z) - e0) <= 1e-15);
  CHECK(std::abs(hermite_function(1, z) - std::sqrt(2.0) * z * e0) <= 1e-15);
  CHECK(std::abs(hermite_function(2, z) - (2.0 * z * z - 1.0) / std::sqrt(2.0) * e0) <= 1e-15);
}

TEST_CASE("hermite_function parity and extreme arguments") {
  for (int n = 0; n < 30; ++n) {
    for (double x : {0.3, 1.7, 4.2}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(std::abs(hermite_function(n, -x) - sign * hermite_function(n, x)) <= 1e-14);
    }
  }
  const cplx far = hermite_function(500, 45.0);
  CHECK(std::isfinite(far.real()));
  CHECK(std::abs(hermite_function(3, 60.0)) < 1e-300);
  CHECK(code_of([] { hermite_function(2, cplx(0.0, 4.5)); }) == ErrorCode::magnitude);
  CHECK(code_of([] { hermite_function(513, 0.0); }) == ErrorCode::domain);
  CHECK(std::isfinite(hermite_function(2, cplx(0.0, 4.5), 5.0).real()));
}

TEST_CASE("Hermite functions are orthonormal under quadrature") {
  const auto r = gauss_hermite_rule(50);
  const int n_max = 39;
  std::vector<std::vector<double>> e;
  for (double x : r.nodes) e.push_back(hermite_functions_real(n_max, x));
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.dx_weights[i] * e[i][n] * e[i][m];
      worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("contour-shift identity") {
  const auto r = uniform_rule(12.0, 2401);
  for (double a : {-1.0, 0.5, 1.0}) {
    std::vector<std::vector<cplx>> e;
    for (double x : r.nodes) e.push_back(hermite_functions(19, cplx(x, a)));
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      for (int m = 0; m < 20; ++m) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r.dx_weights[i] * e[i][n] * e[i][m];
        worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
      }
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("hermite_basis") {
  const auto b = hermite_basis(10);
  CHECK(b->kind == BasisSet::Kind::hermite_analytic);
  CHECK(b->size == 10);
  CHECK(b->grid->size() == static_cast<std::size_t>(default_quad_order(10)));
  for (std::size_t n = 0; n < 10; ++n) CHECK(b->parity_signs[n] == (n % 2 == 0 ? 1 : -1));
  CHECK(code_of([] { hermite_basis(0); }) == ErrorCode::domain);
}

TEST_CASE("anharmonic eigenbasis, beta = 4") {
  const auto grid = test_util::uniform(8.0, 2000);
  const auto b = anharmonic_eigenbasis(4.0, grid, 6);
  REQUIRE(b->size == 6);
  for (std::size_t n = 0; n < 6; ++n) CHECK(b->parity_signs[n] == (n % 2 == 0 ? 1 : -1));
  for (std::size_t n = 1; n < 6; ++n) CHECK(b->energies[n] > b->energies[n - 1]);
  // Ground state of -d^2 + x^4.
  CHECK(std::abs(b->energies[0] - 1.0603620904841829) <= 1e-4);
  double worst = 0.0;
  for (std::size_t n = 0; n < 6; ++n) {
    const auto& v = b->vectors[n];
    for (std::size_t m = 0; m < 6; ++m) {
      double s = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) s += grid->dx_weights[j] * v[j] * b->vectors[m][j];
      worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      CHECK(v[v.size() - 1 - j] == doctest::Approx(b->parity_signs[n] * v[j]).epsilon(1e-8).scale(1.0));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("anharmonic ground energy converges at second order") {
  // h halves exactly between 2000, 3999 and 7997 points.
  auto e0 = [](int points) { return anharmonic_eigenbasis(4.0, test_util::uniform(8.0, points), 2)->energies[0]; };
  const double a = e0(2000), b = e0(3999), c = e0(7997);
  const double ratio = (a - b) / (b - c);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
  CHECK(std::abs(a - b) <= 4.0 * std::abs(b - c) + 1e-8);
}

TEST_CASE("anharmonic eigenbasis preconditions") {
  const auto grid = test_util::uniform(8.0, 400);
  CHECK(code_of([&] { anharmonic_eigenbasis(2.0, grid, 4); }) == ErrorCode::domain);
  CHECK(code_of([&] { anharmonic_eigenbasis(4.0, grid, 101); }) == ErrorCode::domain);
  CHECK(code_of([&] { anharmonic_eigenbasis(4.0, test_util::gauss(40), 4); }) == ErrorCode::structure);
}
