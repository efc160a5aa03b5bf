#include <doctest.h>

#include <cmath>
#include <random>

#include "grslab/krein.hpp"
#include "grslab/metric.hpp"
#include "test_util.hpp"

using namespace grslab;
using test_util::code_of;

namespace {

FunctionRep random_coeffs(const BasisPtr& b, std::mt19937_64& rng, double shift = 0.0) {
  std::normal_distribution<double> normal;
  std::vector<cplx> c(b->size);
  for (auto& v : c) v = cplx(normal(rng), normal(rng));
  return FunctionRep::from_coefficients(b, std::move(c), shift);
}

} // namespace

TEST_CASE("parity on coefficient forms") {
  const auto b = hermite_basis(6);
  const auto e3 = FunctionRep::basis_vector(b, 3);
  CHECK(apply_parity(e3).coeffs()[3] == cplx(-1.0));
  const auto even = FunctionRep::basis_vector(b, 0) + FunctionRep::basis_vector(b, 2);
  const auto je = apply_parity(even);
  CHECK(je.coeffs()[0] == cplx(1.0));
  CHECK(je.coeffs()[2] == cplx(1.0));
  std::mt19937_64 rng(1);
  const auto f = random_coeffs(b, rng, 0.4) + random_coeffs(b, rng);
  const auto jjf = apply_parity(apply_parity(f));
  REQUIRE(jjf.terms().size() == f.terms().size());
  for (std::size_t t = 0; t < f.terms().size(); ++t) {
    CHECK(jjf.terms()[t].shift == f.terms()[t].shift);
    CHECK(jjf.terms()[t].coeffs == f.terms()[t].coeffs);
  }
  // (Jf)(x) = f(-x), also off the real axis.
  for (double x : {-1.3, 0.2, 2.4}) CHECK(std::abs(apply_parity(f)(x) - f(-x)) <= 1e-13);
}

TEST_CASE("parity on sample forms") {
  const auto b = hermite_basis(6);
  std::mt19937_64 rng(2);
  const auto f = random_coeffs(b, rng).to_samples();
  const auto jjf = apply_parity(apply_parity(f));
  for (std::size_t j = 0; j < f.samples().size(); ++j) CHECK(jjf.samples()[j] == f.samples()[j]);
  auto rule = std::make_shared<QuadratureRule>(uniform_rule(1.0, 5));
  rule->nodes[0] = -1.1;
  const RulePtr asym = rule;
  CHECK(code_of([&] { apply_parity(FunctionRep::from_samples(asym, std::vector<cplx>(5))); }) ==
        ErrorCode::structure);
}

TEST_CASE("inner product values and sesquilinearity") {
  const auto b = hermite_basis(4);
  const auto e0 = FunctionRep::basis_vector(b, 0);
  const auto e1 = FunctionRep::basis_vector(b, 1);
  CHECK(inner(e0, e0) == cplx(1.0));
  CHECK(inner(e0, e1) == cplx(0.0));
  const cplx i(0.0, 1.0);
  CHECK(inner(2.0 * e0 + i * e1, e1) == i);
  CHECK(inner(e1, 2.0 * e0 + i * e1) == -i);
  CHECK(std::abs(inner(e0.to_samples(), e0.to_samples()) - 1.0) <= 1e-13);
  CHECK(code_of([&] { inner(e0, e0.to_samples()); }) == ErrorCode::structure);
  CHECK(code_of([&] { inner(e0, FunctionRep::basis_vector(hermite_basis(5), 0)); }) == ErrorCode::structure);
}

TEST_CASE("random pairs: Hermitian symmetry and self-adjoint parity") {
  const auto b = hermite_basis(10);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const double s1 = 0.1 * (trial % 5), s2 = -0.1 * (trial % 3);
    const auto f = random_coeffs(b, rng, s1);
    const auto g = random_coeffs(b, rng, s2);
    CHECK(std::abs(inner(g, f) - std::conj(inner(f, g))) <= 1e-10);
    CHECK(std::abs(inner(apply_parity(f), g) - inner(f, apply_parity(g))) <= 1e-10);
    CHECK(std::abs(krein_inner(g, f) - std::conj(krein_inner(f, g))) <= 1e-10);
    CHECK(std::abs(krein_inner(f, f).imag()) <= 1e-10);
    CHECK(inner(f, f).real() >= 0.0);
  }
}

TEST_CASE("Krein product is indefinite") {
  const auto b = hermite_basis(4);
  const auto e0 = FunctionRep::basis_vector(b, 0);
  const auto e1 = FunctionRep::basis_vector(b, 1);
  CHECK(krein_inner(e1, e1) == cplx(-1.0));
  CHECK(krein_inner(e0, e0) == cplx(1.0));
  // Cauchy-Schwarz fails for [.,.]: |[f,g]|^2 = 4 > [f,f][g,g] = 0.
  const auto f = e0 + e1, g = e0 - e1;
  CHECK(std::norm(krein_inner(f, g)) > krein_inner(f, f).real() * krein_inner(g, g).real());
  CHECK(std::norm(inner(f, g)) <= inner(f, f).real() * inner(g, g).real());
}

TEST_CASE("Gram matrices") {
  const auto b = hermite_basis(12);
  std::vector<FunctionRep> fam;
  for (std::size_t n = 0; n < 12; ++n) fam.push_back(FunctionRep::basis_vector(b, n).to_samples());
  const auto h = gram_matrix(fam, ProductKind::hilbert);
  const std::vector<double> ones(12, 1.0);
  CHECK(h.defect_from_diagonal(ones) <= 1e-10);
  const auto k = gram_matrix(fam, ProductKind::krein);
  std::vector<double> alternating;
  for (int n = 0; n < 12; ++n) alternating.push_back(n % 2 == 0 ? 1.0 : -1.0);
  CHECK(k.defect_from_diagonal(alternating) <= 1e-10);
  CHECK(k.hermitian_defect() <= kHermitianTol);

  std::vector<FunctionRep> parity_first;
  for (const auto& f : fam) parity_first.push_back(apply_parity(f));
  const auto via_parity = gram_matrix(fam, [&](const FunctionRep& f, const FunctionRep& g) {
    return inner(apply_parity(f), g);
  });
  for (std::size_t i = 0; i < k.data.size(); ++i) CHECK(std::abs(k.data[i] - via_parity.data[i]) <= 1e-12);
  CHECK(code_of([] { gram_matrix({}, ProductKind::hilbert); }) == ErrorCode::structure);
}

TEST_CASE("parallel Gram evaluation is bit-identical") {
  const auto b = hermite_basis(16);
  const auto Q = MetricOperatorQ::multiplication("(scale -0.5 (pow x 2))");
  std::vector<FunctionRep> fam;
  for (std::size_t n = 0; n < 16; ++n) fam.push_back(apply_exp_q(Q, 0.5, FunctionRep::basis_vector(b, n)));
  for (auto kind : {ProductKind::hilbert, ProductKind::krein}) {
    const auto seq = gram_matrix(fam, kind, false);
    const auto par = gram_matrix(fam, kind, true);
    CHECK(seq.data == par.data);
  }
}
