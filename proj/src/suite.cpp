#include "grslab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) { return json_number(v); }

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  /// Runs `body`, which returns (value, detail); errors become failed checks.
  void add(const std::string& name, double tolerance, Check::Kind kind,
           const std::function<std::pair<double, std::string>()>& body) {
    Check c{name, kNaN, tolerance, kind, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [value, detail] = body();
      c.value = value;
      c.detail = std::move(detail);
    } catch (const Error& e) {
      c.detail = std::string(to_string(e.code())) + ": " + e.what();
    }
    c.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(c));
  }

  void add_value(const std::string& name, double tolerance, Check::Kind kind,
                 const std::function<double()>& body) {
    add(name, tolerance, kind, [&] { return std::pair{body(), std::string()}; });
  }

 private:
  VerificationReport& report_;
};

std::vector<FunctionRep> random_span(const BiorthogonalSystem& sys, int count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const std::size_t m = std::min<std::size_t>(sys.N, 8);
  std::vector<FunctionRep> out;
  for (int i = 0; i < count; ++i) {
    std::vector<cplx> c(m);
    for (auto& v : c) v = cplx(normal(rng), normal(rng));
    out.push_back(linear_combination(c, std::span(sys.phi).first(m)));
  }
  return out;
}

std::string signs_text(const std::vector<int>& s) {
  std::string out;
  for (int v : s) out += v > 0 ? '+' : '-';
  return out;
}

} // namespace

VerificationReport run_suite(const ExampleSpec& spec, const SuiteOptions& options) {
  const Tolerances& tol = options.tol;
  VerificationReport report;
  report.example = example_name(spec.id);
  report.params.emplace_back("N", std::to_string(spec.N));
  switch (spec.id) {
    case ExampleId::shifted_ho: report.params.emplace_back("a", num(spec.a)); break;
    case ExampleId::perturbed_anharmonic:
      report.params.emplace_back("beta", num(spec.beta));
      report.params.emplace_back("p", json_string(spec.p_expr));
      break;
    case ExampleId::example1: break;
  }
  const bool numeric = spec.id == ExampleId::perturbed_anharmonic;
  const Verdict expected = options.expect.value_or(expected_verdict(spec.id));
  report.settings = {
      {"basis_size", std::to_string(spec.basis_size == 0 ? spec.N : spec.basis_size)},
      {"quad_order", std::to_string(spec.quad_order)},
      {"basis_grid_l", num(spec.basis_grid_l)},
      {"basis_grid_points", std::to_string(spec.basis_grid_points)},
      {"fd_grid_l", num(spec.fd_grid_l)},
      {"fd_grid_points", std::to_string(spec.fd_grid_points)},
      {"seed", std::to_string(kSuiteSeed)},
      {"random_functions", std::to_string(options.random_functions)},
      {"g0_vectors", std::to_string(options.g0_vectors)},
      {"expect", json_string(to_string(expected))},
      {"parallel", options.parallel ? "true" : "false"},
  };
  Runner run(report);

  std::shared_ptr<const BiorthogonalSystem> sys;
  run.add_value("build", 0.0, Check::Kind::at_most, [&] {
    sys = make_example(spec);
    return 0.0;
  });
  if (!sys) return report;

  run.add_value("biorthogonality", numeric ? tol.biorth_numeric : tol.biorth, Check::Kind::at_most,
                [&] { return biorthogonality_defect(*sys); });

  TypeClassification cls;
  run.add("classify", 0.0, Check::Kind::at_most, [&] {
    cls = classify_type(*sys, tol.krein);
    std::ostringstream os;
    os << "verdict=" << to_string(cls.verdict) << " expected=" << to_string(expected);
    return std::pair{cls.verdict == expected ? 0.0 : 1.0, os.str()};
  });

  const ComplexMatrix krein = gram_matrix(sys->phi, ProductKind::krein, options.parallel);
  if (!options.csv_path.empty()) {
    write_matrix_csv(krein, options.csv_path);
    report.artifacts.push_back(options.csv_path);
  }

  if (expected == Verdict::not_j_orthonormal) {
    run.add_value("j_orthonormality_witness", tol.witness_min, Check::Kind::at_least,
                  [&] { return std::abs(std::abs(krein(0, 0)) - 1.0); });
  } else {
    run.add_value("j_orthonormality", tol.krein, Check::Kind::at_most,
                  [&] { return j_orthonormality_defect(*sys); });
  }

  std::vector<int> signs;
  if (cls.verdict == Verdict::first_type) {
    run.add("sign_sequence", 0.0, Check::Kind::at_most, [&] {
      signs = sign_sequence(*sys, tol.krein);
      double mismatches = 0.0;
      for (std::size_t n = 0; n < signs.size(); ++n) {
        if (signs[n] != (n % 2 == 0 ? 1 : -1)) mismatches += 1.0;
      }
      return std::pair{mismatches, signs_text(signs)};
    });
    if (!signs.empty()) {
      run.add_value("partner", tol.partner, Check::Kind::at_most,
                    [&] { return partner_check(*sys, signs); });
    }
  }
  std::optional<CSymmetryOp> c_op;
  if (cls.verdict == Verdict::first_type) {
    run.add_value("c_symmetry", 0.0, Check::Kind::at_most, [&] {
      c_op = CSymmetryOp::make(sys->Q, sys->grid);
      return 0.0;
    });
  }
  if (c_op) {
    const CSymmetryOp& C = *c_op;
    std::mt19937_64 rng(kSuiteSeed);
    const auto family = random_span(*sys, options.random_functions, rng);
    run.add_value("c_squared", tol.c_squared, Check::Kind::at_most, [&] {
      double worst = 0.0;
      for (const auto& f : family) worst = std::max(worst, norm(apply_c(C, apply_c(C, f)) - f) / norm(f));
      return worst;
    });
    run.add_value("jc_positivity", 0.0, Check::Kind::at_least, [&] {
      double least = std::numeric_limits<double>::infinity();
      for (const auto& f : family) {
        const cplx v = inner(apply_parity(apply_c(C, f)), f);
        least = std::min(least, v.real() / std::pow(norm(f), 2));
      }
      return least > 0.0 ? least : -1.0;
    });
    run.add_value("eq24", tol.eq24, Check::Kind::at_most, [&] {
      double worst = 0.0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = family[i];
        const auto& g = family[(i + 1) % family.size()];
        const cplx a = c_inner(C, f, g);
        const cplx b = weighted_inner(sys->Q, -1, f, g, sys->grid);
        const cplx c = split_inner(C, f, g);
        worst = std::max({worst, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
      }
      return worst;
    });
    if (!signs.empty()) {
      run.add_value("expansion", tol.expansion, Check::Kind::at_most, [&] {
        double worst = 0.0;
        for (const auto& f : family) {
          worst = std::max(worst, expansion_residual(*sys, C, f, sys->N, signs));
        }
        return worst;
      });
    }
  }

  run.add_value("g0_quadratic", tol.g0, Check::Kind::at_most, [&] {
    std::mt19937_64 rng(kSuiteSeed + 1);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (int i = 0; i < options.g0_vectors; ++i) {
      std::vector<cplx> c(sys->N);
      for (auto& v : c) v = cplx(normal(rng), normal(rng));
      const auto [exact, quad] = g0_quadratic_check(*sys, c);
      worst = std::max(worst, std::abs(exact - quad));
    }
    return worst;
  });

  const double eigen_tol = numeric ? tol.eigen_perturbed : tol.eigen;
  const RulePtr fd_grid = example_fd_grid(spec, *sys);
  const auto lambdas = example_eigenvalues(spec, *sys);
  const std::size_t top = std::min(options.eigen_max_n + 1, sys->N);
  run.add_value("eigen_residuals", eigen_tol, Check::Kind::at_most, [&] {
    const auto H = fd_matrix(example_hamiltonian(spec), fd_grid);
    double worst = 0.0;
    for (std::size_t n = 0; n < top; ++n) {
      worst = std::max(worst, eigen_residual(H, sys->phi_on(n, fd_grid), lambdas[n]));
    }
    return worst;
  });
  if (spec.id == ExampleId::example1) {
    run.add_value("adjoint_eigen_residuals", eigen_tol, Check::Kind::at_most, [&] {
      const auto H = fd_matrix(hamiltonian_kind::Example1Adjoint{}, fd_grid);
      double worst = 0.0;
      for (std::size_t n = 0; n < top; ++n) {
        worst = std::max(worst, eigen_residual(H, sys->psi_on(n, fd_grid), lambdas[n]));
      }
      return worst;
    });
  }
  if (spec.id == ExampleId::shifted_ho) {
    double low = kNaN, high = kNaN;
    auto ratios = [&] {
      const int fine = spec.fd_grid_points;
      const int coarse = (fine + 1) / 2;
      const auto g_fine = std::make_shared<const QuadratureRule>(uniform_rule(spec.fd_grid_l, 2 * coarse - 1));
      const auto g_coarse = std::make_shared<const QuadratureRule>(uniform_rule(spec.fd_grid_l, coarse));
      const auto H_fine = fd_matrix(example_hamiltonian(spec), g_fine);
      const auto H_coarse = fd_matrix(example_hamiltonian(spec), g_coarse);
      low = std::numeric_limits<double>::infinity();
      high = 0.0;
      for (std::size_t n = 0; n < top; ++n) {
        const double r = eigen_residual(H_coarse, sys->phi_on(n, g_coarse), lambdas[n]) /
                         eigen_residual(H_fine, sys->phi_on(n, g_fine), lambdas[n]);
        low = std::min(low, r);
        high = std::max(high, r);
      }
    };
    run.add_value("fd_convergence_ratio_min", tol.fd_ratio_low, Check::Kind::at_least, [&] {
      ratios();
      return low;
    });
    run.add_value("fd_convergence_ratio_max", tol.fd_ratio_high, Check::Kind::at_most,
                  [&] { return high; });
  }
  if (numeric) {
    run.add_value("parity_signs", 0.0, Check::Kind::at_most, [&] {
      double mismatches = 0.0;
      for (std::size_t n = 0; n < sys->basis->size; ++n) {
        if (sys->basis->parity_signs[n] != (n % 2 == 0 ? 1 : -1)) mismatches += 1.0;
      }
      return mismatches;
    });
  }
  return report;
}

std::vector<OverlapRow> overlap_table(int n_max) {
  if (n_max < 0 || n_max > kMaxOverlapIndex) {
    fail(ErrorCode::domain, "overlap_table: n_max outside [0, " + std::to_string(kMaxOverlapIndex) + "]");
  }
  std::vector<OverlapRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      OverlapRow r{n, m, overlap_closed_form(n, m), overlap_quadrature(n, m), 0.0};
      r.rel_diff = (n + m) % 2 == 0 ? std::abs(std::abs(r.quadrature) - r.closed_form) / r.closed_form
                                    : std::abs(r.quadrature);
      rows.push_back(r);
    }
  }
  return rows;
}

std::string overlap_csv(const std::vector<OverlapRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "n,m,closed_form,quadrature,rel_diff\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.m << ',' << r.closed_form << ',' << r.quadrature << ',' << r.rel_diff << '\n';
  }
  return os.str();
}

VerificationReport overlap_report(int n_max, const Tolerances& tol) {
  VerificationReport report;
  report.example = "overlap";
  report.params.emplace_back("n_max", std::to_string(n_max));
  Runner run(report);
  std::vector<OverlapRow> rows;
  run.add_value("overlap_table", 0.0, Check::Kind::at_most, [&] {
    rows = overlap_table(n_max);
    return 0.0;
  });
  run.add_value("overlap_even_max_rel_diff", tol.overlap_rel, Check::Kind::at_most, [&] {
    double worst = 0.0;
    for (const auto& r : rows) {
      if ((r.n + r.m) % 2 == 0) worst = std::max(worst, r.rel_diff);
    }
    return worst;
  });
  run.add_value("overlap_odd_max_abs", tol.overlap_odd, Check::Kind::at_most, [&] {
    double worst = 0.0;
    for (const auto& r : rows) {
      if ((r.n + r.m) % 2 != 0) worst = std::max(worst, r.rel_diff);
    }
    return worst;
  });
  run.add_value("overlap_00_vs_sqrt_two_thirds", 1e-10, Check::Kind::at_most,
                [&] { return overlap_closed_form(0, 0) - std::sqrt(2.0 / 3.0); });
  return report;
}

} // namespace grslab
