#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace grslab {

/// Value with first and second derivative, for symbolic functions of x.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Real function of x from a closed prefix grammar:
///
///   expr := NUMBER | x
///         | (add expr expr ...)   | (sub expr expr) | (mul expr expr ...)
///         | (neg expr)            | (scale NUMBER expr)
///         | (pow expr INTEGER)    | (exp expr)
///         | (atan expr)           | (tanh expr)
///         | (gauss NUMBER)        ; e^{-c x^2}
///
/// e.g. "(scale 2 (atan x))" or "(scale -0.5 (pow x 2))". Derivatives are
/// exact (forward-mode jets).
class Expr {
 public:
  struct Node;

  /// Throws ErrorCode::grammar on malformed input.
  static Expr parse(std::string_view text);
  static Expr scaled(double c, const Expr& e);

  double operator()(double x) const;
  Jet jet(double x) const;
  /// Canonical prefix form.
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

} // namespace grslab
