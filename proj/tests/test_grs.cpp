#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "grslab/catalog.hpp"
#include "grslab/grs.hpp"
#include "grslab/specfun.hpp"
#include "test_util.hpp"

using namespace grslab;
using test_util::code_of;

namespace {

std::shared_ptr<const BiorthogonalSystem> catalog_system(ExampleId id) {
  return make_example(default_spec(id));
}

} // namespace

TEST_CASE("diagonal generator builds an exact system") {
  const auto b = hermite_basis(6);
  const std::vector<double> q{0.4, -0.2, 0.0, 1.0, -1.0, 0.3};
  const auto sys = build_system(MetricOperatorQ::diagonal(q), b, 6);
  REQUIRE(sys.phi.size() == 6);
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(sys.phi[n].coeffs()[n] == cplx(std::exp(q[n] / 2)));
    CHECK(sys.psi[n].coeffs()[n] == cplx(std::exp(-q[n] / 2)));
  }
  CHECK(biorthogonality_defect(sys) <= 1e-14);
  const auto e0 = FunctionRep::basis_vector(b, 0);
  for (std::size_t N : {1, 3, 6}) {
    const auto small = build_system(MetricOperatorQ::diagonal(q), b, N);
    const auto [d1, d2] = gq_basis_defect(small, e0, e0);
    CHECK(d1 <= 1e-13);
    CHECK(d2 <= 1e-13);
  }
  const auto zero = build_system(MetricOperatorQ::diagonal(std::vector<double>(6, 0.0)), b, 6);
  const auto f = FunctionRep::from_coefficients(b, {1.0, cplx(0, 1)});
  const auto g = FunctionRep::from_coefficients(b, {2.0, 3.0, 1.0});
  CHECK(std::abs(weighted_inner(zero.Q, 1, f, g) - inner(f, g)) <= 1e-15);
  CHECK(std::abs(weighted_inner(zero.Q, -1, f, g) - inner(f, g)) <= 1e-15);
}

TEST_CASE("translation system is the shifted Hermite family") {
  const auto sys = build_system(MetricOperatorQ::translation(0.5), hermite_basis(16), 16);
  for (std::size_t n = 0; n < 16; ++n) {
    for (double x : {-2.0, 0.0, 1.3}) {
      CHECK(std::abs(sys.phi[n](x) - hermite_function(static_cast<int>(n), cplx(x, 0.5))) <= 1e-13);
      CHECK(std::abs(sys.psi[n](x) - hermite_function(static_cast<int>(n), cplx(x, -0.5))) <= 1e-13);
    }
  }
  CHECK(biorthogonality_defect(sys) <= 1e-8);
}

TEST_CASE("Example-1 system") {
  const auto sys = catalog_system(ExampleId::example1);
  REQUIRE(sys->N == 12);
  CHECK(biorthogonality_defect(*sys) <= 1e-9);
  // psi_n = H_n e^{-x^2/4} up to normalization.
  for (int n : {0, 3, 7}) {
    const auto& psi = sys->psi[static_cast<std::size_t>(n)];
    const auto& rule = *psi.rule();
    const double norm_n = std::sqrt(std::pow(2.0, n) * std::exp(log_gamma(n + 1.0)) * std::sqrt(M_PI));
    for (std::size_t j = 0; j < rule.size(); j += 7) {
      const double x = rule.nodes[j];
      const double expect = hermite_poly(n, x).real() * std::exp(-0.25 * x * x) / norm_n;
      CHECK(std::abs(psi.samples()[j] - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("weighted orthonormality and reconstruction on the catalog systems") {
  for (auto id : {ExampleId::shifted_ho, ExampleId::example1, ExampleId::perturbed_anharmonic}) {
    INFO(example_name(id));
    const auto sys = catalog_system(id);
    CHECK(weighted_orthonormality_defect(*sys) <= 1e-8);
    CHECK(reconstruction_defect(*sys) <= 1e-9);
    const auto g = weighted_gram(sys->Q, -1, sys->phi, sys->grid);
    std::vector<double> ones(sys->N, 1.0);
    CHECK(g.defect_from_diagonal(ones) <= 1e-8);
  }
}

TEST_CASE("resolution of the identity") {
  const auto basis = hermite_basis(64);
  const auto Q = MetricOperatorQ::translation(0.5);
  const auto f = test_util::normalized_gaussian(basis);
  CHECK(std::abs(inner(f, f) - 1.0) <= 1e-12);
  double previous = 1.0;
  for (std::size_t N : {8, 16, 32}) {
    const auto sys = build_system(Q, basis, N);
    const auto [d1, d2] = gq_basis_defect(sys, f, f);
    const double d = std::max(d1, d2);
    CHECK(d < previous);
    previous = d;
  }
  CHECK(previous <= 1e-6);

  const auto sys = build_system(Q, basis, 16);
  const auto e1 = FunctionRep::basis_vector(basis, 1);
  const auto e2 = FunctionRep::basis_vector(basis, 2);
  const auto [d1, d2] = gq_basis_defect(sys, e1, e2);
  CHECK(d1 <= 1e-8);
  CHECK(d2 <= 1e-8);
}

TEST_CASE("G_0 quadratic form") {
  const auto sys = catalog_system(ExampleId::shifted_ho);
  const cplx i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  struct Case {
    std::vector<cplx> c;
    double expect;
  };
  for (const auto& [c, expect] : {Case{{1.0, 0.0, 0.0}, 1.0}, Case{{r, i * r}, 1.0}, Case{{3.0, 4.0}, 25.0}}) {
    const auto [sum, quad] = g0_quadratic_check(*sys, c);
    CHECK(sum == doctest::Approx(expect).epsilon(1e-15));
    CHECK(std::abs(quad - expect) <= 1e-7 * expect);
  }
  CHECK(code_of([&] { g0_quadratic_check(*sys, std::vector<cplx>(17, 1.0)); }) == ErrorCode::domain);
  CHECK(code_of([&] { g0_quadratic_check(*sys, std::vector<cplx>{}); }) == ErrorCode::domain);

  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal;
  for (auto id : {ExampleId::shifted_ho, ExampleId::example1, ExampleId::perturbed_anharmonic}) {
    const auto s = catalog_system(id);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<cplx> c(1 + static_cast<std::size_t>(trial) % s->N);
      for (auto& v : c) v = cplx(normal(rng), normal(rng));
      const auto [sum, quad] = g0_quadratic_check(*s, c);
      CHECK(quad > 0.0);
      CHECK(std::abs(sum - quad) <= 1e-7 * std::max(1.0, sum));
    }
  }
}

TEST_CASE("build_system rejects generators outside the decay threshold") {
  const auto b = hermite_basis(8);
  try {
    build_system(MetricOperatorQ::multiplication("(pow x 2)"), b, 8);
    FAIL("no error raised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
    const std::string what = e.what();
    CHECK(what.find("e_0") != std::string::npos);
    CHECK(what.find("+Q/2") != std::string::npos);
  }
  CHECK(code_of([&] { build_system(MetricOperatorQ::translation(0.5), b, 9); }) == ErrorCode::domain);
  CHECK(code_of([&] { build_system(MetricOperatorQ::translation(0.5), nullptr, 2); }) == ErrorCode::structure);
}
