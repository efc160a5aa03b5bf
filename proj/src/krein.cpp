#include "grslab/krein.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "grslab/error.hpp"

namespace grslab {

double ComplexMatrix::hermitian_defect() const {
  if (rows != cols) fail(ErrorCode::structure, "hermitian_defect: matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double ComplexMatrix::defect_from_diagonal(std::span<const double> diag) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double target = i == j ? diag[i] : 0.0;
      worst = std::max(worst, std::abs((*this)(i, j) - target));
    }
  }
  return worst;
}

FunctionRep apply_parity(const FunctionRep& f) {
  if (f.is_samples()) {
    const auto& rule = *f.rule();
    if (!rule.symmetric()) fail(ErrorCode::structure, "apply_parity: grid is not symmetric");
    auto s = f.samples();
    return FunctionRep::from_samples(f.rule(), std::vector<cplx>(s.rbegin(), s.rend()));
  }
  const auto& signs = f.basis()->parity_signs;
  std::vector<ShiftedTerm> terms = f.terms();
  for (auto& t : terms) {
    t.shift = -t.shift;
    for (std::size_t k = 0; k < t.coeffs.size(); ++k) t.coeffs[k] *= static_cast<double>(signs[k]);
  }
  return FunctionRep::from_terms(f.basis(), std::move(terms));
}

namespace {

cplx sample_inner(const FunctionRep& f, const FunctionRep& g) {
  const auto& w = f.rule()->dx_weights;
  auto a = f.samples();
  auto b = g.samples();
  cplx sum = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) sum += w[j] * a[j] * std::conj(b[j]);
  return sum;
}

} // namespace

cplx inner(const FunctionRep& f, const FunctionRep& g) {
  if (!f.compatible_with(g)) {
    fail(ErrorCode::structure, "inner: functions live on different bases, grids or forms");
  }
  if (f.is_samples()) return sample_inner(f, g);
  if (f.is_plain() && g.is_plain()) {
    auto a = f.coeffs();
    auto b = g.coeffs();
    cplx sum = 0.0;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) sum += a[k] * std::conj(b[k]);
    return sum;
  }
  return sample_inner(f.to_samples(), g.to_samples());
}

double norm(const FunctionRep& f) { return std::sqrt(std::max(0.0, inner(f, f).real())); }

cplx krein_inner(const FunctionRep& f, const FunctionRep& g) { return inner(apply_parity(f), g); }

ComplexMatrix gram_matrix(std::span<const FunctionRep> family, const Product& product,
                          bool parallel) {
  if (family.empty()) fail(ErrorCode::structure, "gram_matrix: empty family");
  const std::size_t n = family.size();
  ComplexMatrix m(n, n);
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = product(family[i], family[j]);
  };
  if (!parallel || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
    return m;
  }
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) fill_row(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return m;
}

ComplexMatrix gram_matrix(std::span<const FunctionRep> family, ProductKind kind, bool parallel) {
  if (kind == ProductKind::hilbert) return gram_matrix(family, Product(inner), parallel);
  return gram_matrix(family, Product(krein_inner), parallel);
}

} // namespace grslab
