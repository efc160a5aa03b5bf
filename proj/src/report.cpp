#include "grslab/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grslab/error.hpp"

namespace grslab {

using ojson = nlohmann::ordered_json;

bool Check::pass() const {
  if (!std::isfinite(value)) return false;
  return kind == Kind::at_most ? std::abs(value) <= tolerance : value >= tolerance;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string json_number(double v) {
  return std::isfinite(v) ? ojson(v).dump() : "null";
}

std::string json_string(const std::string& s) { return ojson(s).dump(); }

std::string to_json(const VerificationReport& report, int indent) {
  ojson j;
  j["example"] = report.example;
  j["params"] = ojson::object();
  for (const auto& [k, v] : report.params) j["params"][k] = ojson::parse(v);
  j["settings"] = ojson::object();
  for (const auto& [k, v] : report.settings) j["settings"][k] = ojson::parse(v);
  j["checks"] = ojson::array();
  for (const auto& c : report.checks) {
    ojson cj;
    cj["name"] = c.name;
    cj["value"] = std::isfinite(c.value) ? ojson(c.value) : ojson(nullptr);
    cj["tolerance"] = c.tolerance;
    cj["kind"] = c.kind == Check::Kind::at_most ? "at_most" : "at_least";
    cj["pass"] = c.pass();
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cj["wall_time_s"] = c.wall_time_s;
    j["checks"].push_back(std::move(cj));
  }
  j["artifacts"] = report.artifacts;
  j["passed"] = report.passed();
  return j.dump(indent) + "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) fail(ErrorCode::io, "write to '" + path + "' failed");
}

void write_json(const VerificationReport& report, const std::string& path) {
  write_text(path, to_json(report));
}

std::string matrix_csv(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "n,m,value_re,value_im\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t k = 0; k < m.cols; ++k) {
      os << i << ',' << k << ',' << m(i, k).real() << ',' << m(i, k).imag() << '\n';
    }
  }
  return os.str();
}

void write_matrix_csv(const ComplexMatrix& m, const std::string& path) {
  write_text(path, matrix_csv(m));
}

} // namespace grslab
