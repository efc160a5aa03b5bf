#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "grslab/expr.hpp"
#include "grslab/function_rep.hpp"

namespace grslab {

/// Self-adjoint generator Q of a generalized Riesz system.
class MetricOperatorQ {
 public:
  /// (Qf)(x) = q(x) f(x).
  struct Multiplication {
    Expr q;
  };
  /// Q = 2ia d/dx, so e^{tQ} f(x) = f(x + 2iat).
  struct TranslationGenerator {
    double a = 0.0;
  };
  /// Q e_n = q_n e_n on a Hermite or numeric basis.
  struct DiagonalHermite {
    std::vector<double> q;
  };
  using Variant = std::variant<Multiplication, TranslationGenerator, DiagonalHermite>;

  static constexpr double kDefaultTranslationCap = 1.0;
  static constexpr double kMaxTranslationCap = 2.0;

  static MetricOperatorQ multiplication(Expr q);
  static MetricOperatorQ multiplication(std::string_view q_expr);
  /// Throws ErrorCode::domain unless 0 < |a| <= cap and cap <= 2.
  static MetricOperatorQ translation(double a, double cap = kDefaultTranslationCap);
  static MetricOperatorQ diagonal(std::vector<double> q);

  const Variant& variant() const { return v_; }
  std::string describe() const;

 private:
  explicit MetricOperatorQ(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// e^{tQ} f for t in {-1, -1/2, 1/2, 1}.
///
/// Multiplication acts pointwise on samples; a coefficient-form input is first
/// sampled on `grid` (or on its basis working grid when `grid` is null).
/// Translation shifts a Hermite coefficient form by 2at in the imaginary
/// direction. Diagonal scales plain coefficients.
FunctionRep apply_exp_q(const MetricOperatorQ& Q, double t, const FunctionRep& f,
                        const RulePtr& grid = nullptr);

enum class Answer { yes, no, undetermined };
const char* to_string(Answer a);

struct AnticommutationResult {
  Answer answer = Answer::undetermined;
  /// max_f ||J e^{-Q} f - e^{Q} J f|| / ||f||; empty when the evidence
  /// computation overflowed.
  std::optional<double> evidence;
};

inline constexpr double kOddnessTol = 1e-12;

/// Structural test of JQ = -QJ for the parity J, with the numeric residual
/// of JGf = G^{-1}Jf (G = e^{-Q}) as evidence. `tests` defaults to e_0..e_5
/// of a Hermite basis; for Multiplication, oddness of q is checked on the
/// nodes of the first test function's grid.
AnticommutationResult anticommutes_with_parity(const MetricOperatorQ& Q,
                                               std::span<const FunctionRep> tests = {});

/// Fraction-of-mass heuristic for membership of f in D(e^{sign Q/2}):
/// 1 - (mass share in the outer 10% of the grid, or last 10% of
/// coefficients) / 0.1, clamped to [0, 1]. A function spread evenly over the
/// grid scores 0, a decaying one scores close to 1.
double domain_decay_score(const MetricOperatorQ& Q, const FunctionRep& f, int sign,
                          const RulePtr& grid = nullptr);
/// Minimum over both signs.
double domain_decay_score(const MetricOperatorQ& Q, const FunctionRep& f,
                          const RulePtr& grid = nullptr);

} // namespace grslab
