#pragma once

#include <span>
#include <vector>

#include "grslab/basis.hpp"

namespace grslab {

/// One term of a coefficient-form function: sum_k coeffs[k] e_k(x + i*shift).
/// A nonzero shift is only meaningful for analytic (Hermite) bases.
struct ShiftedTerm {
  double shift = 0.0;
  std::vector<cplx> coeffs;
};

/// A vector of L^2(R), either as coefficients in an orthonormal basis or as
/// samples on a quadrature rule.
///
/// Coefficient form is a sum of imaginary-shifted expansions so that complex
/// translations and parity act exactly; terms are kept sorted by shift.
/// Products between the two forms are rejected; use `to_samples` or
/// `sample_on` to convert explicitly.
class FunctionRep {
 public:
  enum class Form { coefficients, samples };

  static FunctionRep basis_vector(BasisPtr basis, std::size_t n, double shift = 0.0);
  static FunctionRep from_coefficients(BasisPtr basis, std::vector<cplx> coeffs,
                                       double shift = 0.0);
  static FunctionRep from_terms(BasisPtr basis, std::vector<ShiftedTerm> terms);
  static FunctionRep from_samples(RulePtr rule, std::vector<cplx> values);

  Form form() const { return form_; }
  bool is_coefficients() const { return form_ == Form::coefficients; }
  bool is_samples() const { return form_ == Form::samples; }

  /// Coefficient form only.
  const BasisPtr& basis() const;
  /// Sample form: the sampling rule. Coefficient form: the basis working grid.
  const RulePtr& rule() const;
  const std::vector<ShiftedTerm>& terms() const { return terms_; }
  /// Coefficient form with a single unshifted term.
  bool is_plain() const;
  std::span<const cplx> coeffs() const;
  std::span<const cplx> samples() const;

  /// Evaluate a Hermite coefficient form at complex z.
  cplx operator()(cplx z) const;

  /// Coefficient form sampled on the basis working grid.
  FunctionRep to_samples() const;
  /// Hermite coefficient form sampled on an arbitrary rule; numeric bases
  /// only on their own grid; sample form only onto the same rule.
  FunctionRep sample_on(const RulePtr& rule) const;
  /// Hermite coefficient form translated to f(x + i*ds).
  FunctionRep shifted(double ds) const;

  bool compatible_with(const FunctionRep& other) const;

  FunctionRep& operator+=(const FunctionRep& other);
  FunctionRep& operator-=(const FunctionRep& other);
  FunctionRep& operator*=(cplx s);

  friend FunctionRep operator+(FunctionRep a, const FunctionRep& b) { return a += b; }
  friend FunctionRep operator-(FunctionRep a, const FunctionRep& b) { return a -= b; }
  friend FunctionRep operator*(cplx s, FunctionRep a) { return a *= s; }

 private:
  void normalize_terms();

  Form form_ = Form::samples;
  BasisPtr basis_;
  RulePtr rule_;
  std::vector<ShiftedTerm> terms_;
  std::vector<cplx> samples_;
};

/// Same rule object, or identical nodes and weights.
bool same_rule(const QuadratureRule& a, const QuadratureRule& b);
bool same_basis(const BasisSet& a, const BasisSet& b);

/// sum_n c_n f_n over a nonempty family of compatible functions.
FunctionRep linear_combination(std::span<const cplx> c, std::span<const FunctionRep> family);

} // namespace grslab
