#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grslab/krein.hpp"

namespace grslab {

struct Check {
  enum class Kind { at_most, at_least };

  std::string name;
  /// NaN when the computation raised an error (serialized as null).
  double value = 0.0;
  double tolerance = 0.0;
  Kind kind = Kind::at_most;
  std::string detail;
  double wall_time_s = 0.0;

  /// at_most: |value| <= tolerance; at_least: value >= tolerance.
  bool pass() const;
};

struct VerificationReport {
  std::string example;
  /// Insertion-ordered key/value pairs; values are JSON literals.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<Check> checks;
  std::vector<std::string> artifacts;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

/// {"example", "params", "settings", "checks": [{"name", "value",
/// "tolerance", "kind", "pass", "detail", "wall_time_s"}], "artifacts", "passed"}
std::string to_json(const VerificationReport& report, int indent = 2);

/// Throws ErrorCode::io when the path cannot be written.
void write_text(const std::string& path, const std::string& text);
void write_json(const VerificationReport& report, const std::string& path);

/// Header `n,m,value_re,value_im`, one row per entry in row-major order.
std::string matrix_csv(const ComplexMatrix& m);
void write_matrix_csv(const ComplexMatrix& m, const std::string& path);

/// JSON literal for a double (null for non-finite values).
std::string json_number(double v);
std::string json_string(const std::string& s);

} // namespace grslab
