#include "grslab/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "grslab/error.hpp"

namespace grslab {

enum class Op { number, var, add, sub, mul, neg, scale, pow, exp, atan, tanh, gauss };

struct Expr::Node {
  Op op = Op::number;
  double c = 0.0;
  int k = 0;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr root = parse_expr();
    skip_space();
    if (pos_ != text_.size()) error("trailing characters");
    return root;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::grammar, "expression '" + std::string(text_) + "': " + what + " at offset " +
                                 std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) error("expected a symbol or number");
    return text_.substr(start, pos_ - start);
  }

  static bool to_number(std::string_view s, double& out) {
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto res = std::from_chars(first, s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size() && std::isfinite(out);
  }

  double number() {
    const auto s = atom();
    double v = 0.0;
    if (!to_number(s, v)) error("expected a number, got '" + std::string(s) + "'");
    return v;
  }

  void expect_close() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
    ++pos_;
  }

  bool at_close() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ')';
  }

  NodePtr parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    auto node = std::make_shared<Expr::Node>();
    if (text_[pos_] != '(') {
      const auto s = atom();
      if (s == "x") {
        node->op = Op::var;
      } else if (double v = 0.0; to_number(s, v)) {
        node->op = Op::number;
        node->c = v;
      } else {
        error("unknown symbol '" + std::string(s) + "'");
      }
      return node;
    }
    ++pos_;
    const auto head = atom();
    if (head == "add" || head == "mul") {
      node->op = head == "add" ? Op::add : Op::mul;
      while (!at_close()) node->args.push_back(parse_expr());
      if (node->args.size() < 2) error(std::string(head) + " needs at least two operands");
    } else if (head == "sub") {
      node->op = Op::sub;
      node->args.push_back(parse_expr());
      node->args.push_back(parse_expr());
    } else if (head == "neg" || head == "exp" || head == "atan" || head == "tanh") {
      node->op = head == "neg" ? Op::neg : head == "exp" ? Op::exp : head == "atan" ? Op::atan : Op::tanh;
      node->args.push_back(parse_expr());
    } else if (head == "scale") {
      node->op = Op::scale;
      node->c = number();
      node->args.push_back(parse_expr());
    } else if (head == "pow") {
      node->op = Op::pow;
      node->args.push_back(parse_expr());
      const double k = number();
      if (k < 0.0 || k != std::floor(k) || k > 64.0) error("pow exponent must be an integer in [0, 64]");
      node->k = static_cast<int>(k);
    } else if (head == "gauss") {
      node->op = Op::gauss;
      node->c = number();
    } else {
      error("unknown operator '" + std::string(head) + "'");
    }
    expect_close();
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render(const Expr::Node& n) {
  auto args = [&n] {
    std::string s;
    for (const auto& a : n.args) s += " " + render(*a);
    return s;
  };
  switch (n.op) {
    case Op::number: return format_number(n.c);
    case Op::var: return "x";
    case Op::add: return "(add" + args() + ")";
    case Op::sub: return "(sub" + args() + ")";
    case Op::mul: return "(mul" + args() + ")";
    case Op::neg: return "(neg" + args() + ")";
    case Op::scale: return "(scale " + format_number(n.c) + args() + ")";
    case Op::pow: return "(pow" + args() + " " + std::to_string(n.k) + ")";
    case Op::exp: return "(exp" + args() + ")";
    case Op::atan: return "(atan" + args() + ")";
    case Op::tanh: return "(tanh" + args() + ")";
    case Op::gauss: return "(gauss " + format_number(n.c) + ")";
  }
  return {};
}

// Outer function g applied to inner jet a, given g(a), g'(a), g''(a).
Jet chain(const Jet& a, double g, double dg, double ddg) {
  return {g, dg * a.d1, ddg * a.d1 * a.d1 + dg * a.d2};
}

Jet product(const Jet& a, const Jet& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}

Jet eval(const Expr::Node& n, double x) {
  switch (n.op) {
    case Op::number: return {n.c, 0.0, 0.0};
    case Op::var: return {x, 1.0, 0.0};
    case Op::add: {
      Jet s;
      for (const auto& a : n.args) {
        const Jet j = eval(*a, x);
        s = {s.value + j.value, s.d1 + j.d1, s.d2 + j.d2};
      }
      return s;
    }
    case Op::sub: {
      const Jet a = eval(*n.args[0], x);
      const Jet b = eval(*n.args[1], x);
      return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
    }
    case Op::mul: {
      Jet p{1.0, 0.0, 0.0};
      for (const auto& a : n.args) p = product(p, eval(*a, x));
      return p;
    }
    case Op::neg: {
      const Jet a = eval(*n.args[0], x);
      return {-a.value, -a.d1, -a.d2};
    }
    case Op::scale: {
      const Jet a = eval(*n.args[0], x);
      return {n.c * a.value, n.c * a.d1, n.c * a.d2};
    }
    case Op::pow: {
      const Jet a = eval(*n.args[0], x);
      const int k = n.k;
      if (k == 0) return {1.0, 0.0, 0.0};
      if (k == 1) return a;
      const double pk2 = std::pow(a.value, k - 2);
      const double pk1 = pk2 * a.value;
      return chain(a, pk1 * a.value, k * pk1, k * (k - 1.0) * pk2);
    }
    case Op::exp: {
      const Jet a = eval(*n.args[0], x);
      const double e = std::exp(a.value);
      return chain(a, e, e, e);
    }
    case Op::atan: {
      const Jet a = eval(*n.args[0], x);
      const double den = 1.0 + a.value * a.value;
      return chain(a, std::atan(a.value), 1.0 / den, -2.0 * a.value / (den * den));
    }
    case Op::tanh: {
      const Jet a = eval(*n.args[0], x);
      const double t = std::tanh(a.value);
      const double s = 1.0 - t * t;
      return chain(a, t, s, -2.0 * t * s);
    }
    case Op::gauss: {
      const double g = std::exp(-n.c * x * x);
      return {g, -2.0 * n.c * x * g, (4.0 * n.c * n.c * x * x - 2.0 * n.c) * g};
    }
  }
  return {};
}

} // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse_all();
  e.text_ = render(*e.root_);
  return e;
}

Expr Expr::scaled(double c, const Expr& inner) {
  if (!inner.root_) fail(ErrorCode::grammar, "scaled: empty expression");
  auto node = std::make_shared<Node>();
  node->op = Op::scale;
  node->c = c;
  node->args.push_back(inner.root_);
  Expr e;
  e.root_ = node;
  e.text_ = render(*node);
  return e;
}

double Expr::operator()(double x) const { return jet(x).value; }

Jet Expr::jet(double x) const {
  if (!root_) fail(ErrorCode::grammar, "evaluating an empty expression");
  return eval(*root_, x);
}

} // namespace grslab
