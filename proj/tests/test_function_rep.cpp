#include <doctest.h>

#include <cmath>

#include "grslab/function_rep.hpp"
#include "test_util.hpp"

using namespace grslab;
using test_util::code_of;

TEST_CASE("basis vectors evaluate as shifted Hermite functions") {
  const auto b = hermite_basis(8);
  for (std::size_t n = 0; n < 8; ++n) {
    for (double shift : {0.0, 0.5, -1.0}) {
      const auto f = FunctionRep::basis_vector(b, n, shift);
      for (double x : {-2.0, 0.0, 0.3, 1.9}) {
        const cplx z(x, 0.2);
        CHECK(std::abs(f(z) - hermite_function(static_cast<int>(n), z + cplx(0.0, shift))) <= 1e-14);
      }
    }
  }
}

TEST_CASE("complex translations compose and merge") {
  const auto b = hermite_basis(6);
  const auto f = FunctionRep::basis_vector(b, 3);
  const auto g = f.shifted(0.3).shifted(0.2);
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].shift == doctest::Approx(0.5));
  const auto h = g + f.shifted(0.5);
  REQUIRE(h.terms().size() == 1);
  CHECK(h.terms()[0].coeffs[3] == cplx(2.0));
  const auto mixed = f + f.shifted(0.5);
  CHECK(mixed.terms().size() == 2);
  CHECK_FALSE(mixed.is_plain());
  CHECK(f.is_plain());
  CHECK(code_of([&] { f.shifted(4.5); }) == ErrorCode::magnitude);
}

TEST_CASE("linear structure") {
  const auto b = hermite_basis(4);
  const auto f = FunctionRep::from_coefficients(b, {1.0, cplx(0.0, 2.0)});
  const auto g = FunctionRep::from_coefficients(b, {0.5, 0.0, 3.0});
  const auto s = cplx(2.0, -1.0) * f + g - f;
  const auto c = s.coeffs();
  CHECK(c[0] == cplx(1.5, -1.0));
  CHECK(c[1] == cplx(0.0, 2.0) * cplx(1.0, -1.0));
  CHECK(c[2] == cplx(3.0));
  const std::vector<cplx> w{2.0, -1.0};
  const std::vector<FunctionRep> fam{f, g};
  const auto lc = linear_combination(w, fam);
  CHECK(lc.coeffs()[2] == cplx(-3.0));
  CHECK(code_of([&] { linear_combination(w, std::span<const FunctionRep>()); }) == ErrorCode::structure);
  CHECK(code_of([&] { FunctionRep::from_coefficients(b, std::vector<cplx>(5, 1.0)); }) ==
        ErrorCode::structure);
}

TEST_CASE("sample forms") {
  const auto b = hermite_basis(5);
  const auto f = FunctionRep::basis_vector(b, 2, 0.25);
  const auto s = f.to_samples();
  REQUIRE(s.is_samples());
  CHECK(s.rule() == b->grid);
  for (std::size_t j = 0; j < s.rule()->size(); ++j) {
    CHECK(std::abs(s.samples()[j] - hermite_function(2, cplx(s.rule()->nodes[j], 0.25))) <= 1e-14);
  }
  const auto grid = test_util::uniform(10.0, 501);
  const auto u = f.sample_on(grid);
  CHECK(u.rule() == grid);
  CHECK(code_of([&] { s.sample_on(grid); }) == ErrorCode::structure);
  CHECK(code_of([&] { f + s; }) == ErrorCode::structure);
  CHECK(code_of([&] { s + u; }) == ErrorCode::structure);
  CHECK(code_of([&] { FunctionRep::from_samples(grid, std::vector<cplx>(3)); }) == ErrorCode::structure);
  CHECK(code_of([&] { s.coeffs(); }) == ErrorCode::structure);
  CHECK(code_of([&] { f.samples(); }) == ErrorCode::structure);
}

TEST_CASE("numeric bases are only known on their own grid") {
  const auto grid = test_util::uniform(8.0, 800);
  const auto b = anharmonic_eigenbasis(4.0, grid, 4);
  const auto f = FunctionRep::basis_vector(b, 1);
  const auto s = f.to_samples();
  for (std::size_t j = 0; j < grid->size(); ++j) CHECK(s.samples()[j].real() == b->vectors[1][j]);
  CHECK(code_of([&] { f.sample_on(test_util::uniform(8.0, 801)); }) == ErrorCode::structure);
  CHECK(code_of([&] { f.shifted(0.1); }) == ErrorCode::structure);
  CHECK(code_of([&] { f(cplx(0.0)); }) == ErrorCode::structure);
  CHECK(code_of([&] { FunctionRep::basis_vector(b, 0, 0.5); }) == ErrorCode::structure);
  // Same nodes in a separately built rule count as the same grid.
  CHECK(f.sample_on(test_util::uniform(8.0, 800)).is_samples());
}
