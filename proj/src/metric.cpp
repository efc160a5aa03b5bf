#include "grslab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grslab/error.hpp"
#include "grslab/krein.hpp"

namespace grslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kMaxExponent = 700.0;
constexpr double kOuterShare = 0.1;

void check_exponent(double t) {
  if (t != 1.0 && t != -1.0 && t != 0.5 && t != -0.5) {
    std::ostringstream os;
    os << "apply_exp_q: exponent " << t << " not in {-1, -1/2, 1/2, 1}";
    fail(ErrorCode::domain, os.str());
  }
}

double guarded_exp(double arg, double x) {
  if (arg > kMaxExponent) {
    std::ostringstream os;
    os << "apply_exp_q: e^{tQ} factor e^" << arg << " at x = " << x << " overflows";
    fail(ErrorCode::magnitude, os.str());
  }
  return std::exp(arg);
}

const std::vector<FunctionRep>& default_tests() {
  static const std::vector<FunctionRep> tests = [] {
    const BasisPtr basis = hermite_basis(8);
    std::vector<FunctionRep> out;
    for (std::size_t n = 0; n < 6; ++n) out.push_back(FunctionRep::basis_vector(basis, n));
    return out;
  }();
  return tests;
}

double mass_fraction_outer(const FunctionRep& g) {
  if (g.is_plain()) {
    auto c = g.coeffs();
    const std::size_t size = g.basis()->size;
    const std::size_t tail_start = size - size / 10;
    double total = 0.0, tail = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double m = std::norm(c[k]);
      total += m;
      if (k >= tail_start) tail += m;
    }
    return total > 0.0 ? tail / total : 0.0;
  }
  const FunctionRep s = g.to_samples();
  const auto& rule = *s.rule();
  double xmax = 0.0;
  for (double x : rule.nodes) xmax = std::max(xmax, std::abs(x));
  const double cut = (1.0 - kOuterShare) * xmax;
  auto v = s.samples();
  double total = 0.0, outer = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double m = rule.dx_weights[j] * std::norm(v[j]);
    total += m;
    if (std::abs(rule.nodes[j]) >= cut) outer += m;
  }
  return total > 0.0 ? outer / total : 0.0;
}

} // namespace

const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::undetermined: return "undetermined";
  }
  return "undetermined";
}

MetricOperatorQ MetricOperatorQ::multiplication(Expr q) {
  return MetricOperatorQ(Multiplication{std::move(q)});
}

MetricOperatorQ MetricOperatorQ::multiplication(std::string_view q_expr) {
  return multiplication(Expr::parse(q_expr));
}

MetricOperatorQ MetricOperatorQ::translation(double a, double cap) {
  if (!(cap > 0.0) || cap > kMaxTranslationCap) {
    fail(ErrorCode::domain, "translation: cap must lie in (0, 2]");
  }
  if (!std::isfinite(a) || a == 0.0 || std::abs(a) > cap) {
    std::ostringstream os;
    os << "translation: need 0 < |a| <= " << cap << ", got a = " << a;
    fail(ErrorCode::domain, os.str());
  }
  return MetricOperatorQ(TranslationGenerator{a});
}

MetricOperatorQ MetricOperatorQ::diagonal(std::vector<double> q) {
  for (double v : q) {
    if (!std::isfinite(v)) fail(ErrorCode::domain, "diagonal: q must be finite");
  }
  return MetricOperatorQ(DiagonalHermite{std::move(q)});
}

std::string MetricOperatorQ::describe() const {
  return std::visit(overloaded{
                        [](const Multiplication& m) { return "multiplication " + m.q.text(); },
                        [](const TranslationGenerator& t) {
                          std::ostringstream os;
                          os << "translation a=" << t.a;
                          return os.str();
                        },
                        [](const DiagonalHermite& d) {
                          return "diagonal(" + std::to_string(d.q.size()) + ")";
                        },
                    },
                    v_);
}

FunctionRep apply_exp_q(const MetricOperatorQ& Q, double t, const FunctionRep& f,
                        const RulePtr& grid) {
  check_exponent(t);
  return std::visit(
      overloaded{
          [&](const MetricOperatorQ::Multiplication& m) {
            const FunctionRep s =
                f.is_samples() ? (grid ? f.sample_on(grid) : f) : f.sample_on(grid ? grid : f.rule());
            const auto& nodes = s.rule()->nodes;
            auto in = s.samples();
            std::vector<cplx> out(in.size());
            for (std::size_t j = 0; j < in.size(); ++j) {
              out[j] = guarded_exp(t * m.q(nodes[j]), nodes[j]) * in[j];
            }
            return FunctionRep::from_samples(s.rule(), std::move(out));
          },
          [&](const MetricOperatorQ::TranslationGenerator& tr) {
            if (!f.is_coefficients() || f.basis()->kind != BasisSet::Kind::hermite_analytic) {
              fail(ErrorCode::structure,
                   "apply_exp_q: translation generator needs a Hermite coefficient form");
            }
            return f.shifted(2.0 * tr.a * t);
          },
          [&](const MetricOperatorQ::DiagonalHermite& d) {
            if (!f.is_plain()) {
              fail(ErrorCode::structure, "apply_exp_q: diagonal generator needs plain coefficients");
            }
            auto c = f.coeffs();
            if (c.size() > d.q.size()) {
              fail(ErrorCode::structure, "apply_exp_q: diagonal generator shorter than coefficients");
            }
            std::vector<cplx> out(c.begin(), c.end());
            for (std::size_t n = 0; n < out.size(); ++n) {
              out[n] *= guarded_exp(t * d.q[n], static_cast<double>(n));
            }
            return FunctionRep::from_coefficients(f.basis(), std::move(out));
          },
      },
      Q.variant());
}

AnticommutationResult anticommutes_with_parity(const MetricOperatorQ& Q,
                                               std::span<const FunctionRep> tests) {
  if (tests.empty()) tests = default_tests();
  AnticommutationResult result;
  result.answer = std::visit(
      overloaded{
          [&](const MetricOperatorQ::Multiplication& m) {
            double worst = 0.0;
            for (double x : tests.front().rule()->nodes) worst = std::max(worst, std::abs(m.q(x) + m.q(-x)));
            return worst <= kOddnessTol ? Answer::yes : Answer::no;
          },
          [](const MetricOperatorQ::TranslationGenerator&) { return Answer::yes; },
          [](const MetricOperatorQ::DiagonalHermite& d) {
            const bool zero = std::all_of(d.q.begin(), d.q.end(), [](double v) { return v == 0.0; });
            return zero ? Answer::yes : Answer::no;
          },
      },
      Q.variant());

  try {
    double worst = 0.0;
    for (const auto& f : tests) {
      const FunctionRep lhs = apply_parity(apply_exp_q(Q, -1.0, f));
      const FunctionRep rhs = apply_exp_q(Q, 1.0, apply_parity(f));
      const double nf = norm(f);
      if (nf > 0.0) worst = std::max(worst, norm(lhs - rhs) / nf);
    }
    if (std::isfinite(worst)) result.evidence = worst;
  } catch (const Error&) {
    result.evidence.reset();
  }
  return result;
}

double domain_decay_score(const MetricOperatorQ& Q, const FunctionRep& f, int sign,
                          const RulePtr& grid) {
  if (sign != 1 && sign != -1) fail(ErrorCode::domain, "domain_decay_score: sign must be +1 or -1");
  FunctionRep g = f;
  try {
    g = apply_exp_q(Q, 0.5 * sign, f, grid);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::magnitude) return 0.0;
    throw;
  }
  const double fraction = mass_fraction_outer(g);
  return std::clamp(1.0 - fraction / kOuterShare, 0.0, 1.0);
}

double domain_decay_score(const MetricOperatorQ& Q, const FunctionRep& f, const RulePtr& grid) {
  return std::min(domain_decay_score(Q, f, 1, grid), domain_decay_score(Q, f, -1, grid));
}

} // namespace grslab
