#pragma once

#include <functional>
#include <span>
#include <vector>

#include "grslab/function_rep.hpp"

namespace grslab {

/// Dense row-major complex matrix.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, cplx(0.0)) {}

  cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  cplx operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  /// max_{ij} |M_ij - conj(M_ji)|
  double hermitian_defect() const;
  /// max_{ij} |M_ij - delta_ij * diag[i]|
  double defect_from_diagonal(std::span<const double> diag) const;
};

/// The fundamental symmetry J. Only the parity (Pf)(x) = f(-x) is provided.
struct FundamentalSymmetry {
  enum class Kind { parity };
  Kind kind = Kind::parity;
};

/// (Jf)(x) = f(-x). Coefficient form: c_n -> parity_signs[n] c_n, and the
/// complex shift changes sign. Sample form: reversal on a symmetric grid.
FunctionRep apply_parity(const FunctionRep& f);

/// Hilbert inner product, linear in the first argument.
cplx inner(const FunctionRep& f, const FunctionRep& g);
double norm(const FunctionRep& f);

/// Indefinite product [f, g] = <Jf, g>.
cplx krein_inner(const FunctionRep& f, const FunctionRep& g);

using Product = std::function<cplx(const FunctionRep&, const FunctionRep&)>;

enum class ProductKind { hilbert, krein };

/// M_nm = product(family_n, family_m). Entries are independent, so the
/// parallel path returns bit-identical results.
ComplexMatrix gram_matrix(std::span<const FunctionRep> family, const Product& product,
                          bool parallel = false);
ComplexMatrix gram_matrix(std::span<const FunctionRep> family, ProductKind kind,
                          bool parallel = false);

inline constexpr double kHermitianTol = 1e-10;

} // namespace grslab
