// grslab: build the catalog examples and run their verification suites.
//
//   grslab verify <shifted-ho|example1|perturbed-anharmonic> [options]
//   grslab overlap --n-max 12 [--csv PATH] [--json PATH]
//
// Options may also come from a key=value file named by GRSLAB_CONFIG
// (e.g. "a = 0.25"); command-line flags take precedence.
//
// Exit status: 0 all checks passed, 1 some check failed, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grslab/error.hpp"
#include "grslab/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_checks(const grslab::VerificationReport& report) {
  for (const auto& c : report.checks) {
    std::printf("%-4s %-28s value=%-13.6g %s %-9.3g %s\n", c.pass() ? "PASS" : "FAIL", c.name.c_str(),
                c.value, c.kind == grslab::Check::Kind::at_most ? "<=" : ">=", c.tolerance,
                c.detail.c_str());
  }
  std::printf("%s: %s\n", report.example.c_str(), report.passed() ? "passed" : "FAILED");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for generalized Riesz systems in Krein spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with option defaults")->envname("GRSLAB_CONFIG");

  const grslab::Tolerances defaults;
  std::optional<std::size_t> n;
  std::optional<double> a, beta, grid_l, tol_biorth, tol_krein;
  std::optional<std::string> p, expect;
  std::optional<int> quad_order, grid_points;
  std::string json_path, csv_path;
  bool parallel = false;

  app.add_option("--n", n, "truncation N");
  app.add_option("--a", a, "shift parameter of shifted-ho (nonzero, |a| <= 2)");
  app.add_option("--beta", beta, "anharmonic exponent (> 2)");
  app.add_option("--p", p, "odd perturbation p(x) as a prefix expression, e.g. \"(scale 0.5 (atan x))\"");
  app.add_option("--quad-order", quad_order, "Gauss-Hermite order of the Hermite basis")->check(CLI::PositiveNumber);
  app.add_option("--grid-l", grid_l, "half-width of the numeric grid")->check(CLI::PositiveNumber);
  app.add_option("--grid-points", grid_points, "points of the numeric grid")->check(CLI::Range(500, 200000));
  app.add_option("--tol-biorth", tol_biorth, "biorthogonality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-krein", tol_krein, "J-orthonormality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "write the JSON report here");
  app.add_option("--csv", csv_path, "write a CSV matrix here");
  app.add_option("--expect", expect, "expected verdict")
      ->check(CLI::IsMember({"first_type", "not_j_orthonormal", "undetermined"}));
  app.add_flag("--parallel", parallel, "evaluate Gram matrices on several threads");

  auto* verify = app.add_subcommand("verify", "run the verification suite of a catalog example");
  std::string example;
  verify->add_option("example", example, "shifted-ho, example1 or perturbed-anharmonic")
      ->required()
      ->check(CLI::IsMember({"shifted-ho", "example1", "perturbed-anharmonic"}));

  auto* overlap = app.add_subcommand("overlap", "closed-form vs quadrature indefinite overlaps");
  int n_max = 12;
  overlap->add_option("--n-max", n_max, "largest index")->check(CLI::Range(0, grslab::kMaxOverlapIndex));

  if (const char* config = std::getenv("GRSLAB_CONFIG"); config && *config &&
                                                          !std::filesystem::exists(config)) {
    std::cerr << "grslab: GRSLAB_CONFIG names a missing file '" << config << "'\n";
    return kExitUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    grslab::VerificationReport report;
    if (*overlap) {
      report = grslab::overlap_report(n_max, defaults);
      if (!csv_path.empty()) {
        grslab::write_text(csv_path, grslab::overlap_csv(grslab::overlap_table(n_max)));
        report.artifacts.push_back(csv_path);
      }
    } else {
      grslab::ExampleSpec spec = grslab::default_spec(grslab::parse_example(example));
      if (n) spec.N = *n;
      if (a) spec.a = *a;
      if (beta) spec.beta = *beta;
      if (p) spec.p_expr = *p;
      if (quad_order) spec.quad_order = *quad_order;
      const bool numeric = spec.id == grslab::ExampleId::perturbed_anharmonic;
      if (grid_l) (numeric ? spec.basis_grid_l : spec.fd_grid_l) = *grid_l;
      if (grid_points) (numeric ? spec.basis_grid_points : spec.fd_grid_points) = *grid_points;
      try {
        grslab::validate(spec);
        grslab::example_q(spec);
      } catch (const grslab::Error& e) {
        std::cerr << "grslab: " << e.what() << "\n";
        return kExitUsage;
      }

      grslab::SuiteOptions options;
      if (tol_biorth) options.tol.biorth = options.tol.biorth_numeric = *tol_biorth;
      if (tol_krein) options.tol.krein = *tol_krein;
      if (expect) options.expect = grslab::parse_verdict(*expect);
      options.parallel = parallel;
      options.csv_path = csv_path;
      report = grslab::run_suite(spec, options);
    }
    if (!json_path.empty()) grslab::write_json(report, json_path);
    print_checks(report);
    return report.passed() ? kExitPass : kExitFail;
  } catch (const grslab::Error& e) {
    std::cerr << "grslab: " << grslab::to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == grslab::ErrorCode::usage ? kExitUsage : kExitFail;
  }
}
