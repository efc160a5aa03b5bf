#include "grslab/function_rep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

namespace {

constexpr double kShiftMergeTol = 1e-13;

bool all_zero(const std::vector<cplx>& v) {
  return std::all_of(v.begin(), v.end(), [](cplx c) { return c == cplx(0.0); });
}

void require_finite(const std::vector<cplx>& v, const char* where) {
  for (cplx c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      fail(ErrorCode::magnitude, std::string(where) + ": non-finite value");
    }
  }
}

} // namespace

bool same_rule(const QuadratureRule& a, const QuadratureRule& b) {
  if (&a == &b) return true;
  return a.kind == b.kind && a.nodes == b.nodes && a.dx_weights == b.dx_weights;
}

bool same_basis(const BasisSet& a, const BasisSet& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.size != b.size) return false;
  if (a.kind == BasisSet::Kind::anharmonic_numeric && a.vectors != b.vectors) return false;
  return same_rule(*a.grid, *b.grid);
}

FunctionRep FunctionRep::basis_vector(BasisPtr basis, std::size_t n, double shift) {
  if (!basis || n >= basis->size) {
    std::ostringstream os;
    os << "basis_vector: index " << n << " outside basis";
    fail(ErrorCode::domain, os.str());
  }
  std::vector<cplx> c(n + 1, cplx(0.0));
  c[n] = 1.0;
  return from_coefficients(std::move(basis), std::move(c), shift);
}

FunctionRep FunctionRep::from_coefficients(BasisPtr basis, std::vector<cplx> coeffs,
                                           double shift) {
  std::vector<ShiftedTerm> terms;
  terms.push_back({shift, std::move(coeffs)});
  return from_terms(std::move(basis), std::move(terms));
}

FunctionRep FunctionRep::from_terms(BasisPtr basis, std::vector<ShiftedTerm> terms) {
  if (!basis) fail(ErrorCode::structure, "from_terms: null basis");
  for (const auto& t : terms) {
    if (t.coeffs.size() > basis->size) {
      fail(ErrorCode::structure, "from_terms: more coefficients than basis functions");
    }
    if (t.shift != 0.0 && basis->kind != BasisSet::Kind::hermite_analytic) {
      fail(ErrorCode::structure, "from_terms: complex shifts need an analytic basis");
    }
    require_finite(t.coeffs, "from_terms");
  }
  FunctionRep f;
  f.form_ = Form::coefficients;
  f.basis_ = std::move(basis);
  f.rule_ = f.basis_->grid;
  f.terms_ = std::move(terms);
  f.normalize_terms();
  return f;
}

FunctionRep FunctionRep::from_samples(RulePtr rule, std::vector<cplx> values) {
  if (!rule) fail(ErrorCode::structure, "from_samples: null rule");
  if (values.size() != rule->size()) {
    fail(ErrorCode::structure, "from_samples: sample count differs from rule size");
  }
  require_finite(values, "from_samples");
  FunctionRep f;
  f.form_ = Form::samples;
  f.rule_ = std::move(rule);
  f.samples_ = std::move(values);
  return f;
}

const BasisPtr& FunctionRep::basis() const {
  if (form_ != Form::coefficients) fail(ErrorCode::structure, "basis: function is in sample form");
  return basis_;
}

const RulePtr& FunctionRep::rule() const { return rule_; }

bool FunctionRep::is_plain() const {
  return form_ == Form::coefficients &&
         (terms_.empty() || (terms_.size() == 1 && terms_[0].shift == 0.0));
}

std::span<const cplx> FunctionRep::coeffs() const {
  if (!is_plain()) fail(ErrorCode::structure, "coeffs: function is not a plain coefficient vector");
  if (terms_.empty()) return {};
  return terms_[0].coeffs;
}

std::span<const cplx> FunctionRep::samples() const {
  if (form_ != Form::samples) fail(ErrorCode::structure, "samples: function is in coefficient form");
  return samples_;
}

cplx FunctionRep::operator()(cplx z) const {
  if (form_ != Form::coefficients || basis_->kind != BasisSet::Kind::hermite_analytic) {
    fail(ErrorCode::structure, "evaluate: only Hermite coefficient forms are analytic");
  }
  cplx sum = 0.0;
  for (const auto& t : terms_) {
    if (t.coeffs.empty()) continue;
    const auto e = hermite_functions(static_cast<int>(t.coeffs.size()) - 1,
                                     z + cplx(0.0, t.shift), basis_->max_imag);
    for (std::size_t k = 0; k < t.coeffs.size(); ++k) sum += t.coeffs[k] * e[k];
  }
  return sum;
}

FunctionRep FunctionRep::to_samples() const {
  if (form_ == Form::samples) return *this;
  return sample_on(basis_->grid);
}

FunctionRep FunctionRep::sample_on(const RulePtr& rule) const {
  if (!rule) fail(ErrorCode::structure, "sample_on: null rule");
  if (form_ == Form::samples) {
    if (!same_rule(*rule_, *rule)) fail(ErrorCode::structure, "sample_on: cannot resample sampled data");
    return *this;
  }
  const std::size_t n = rule->size();
  std::vector<cplx> values(n, cplx(0.0));
  if (basis_->kind == BasisSet::Kind::hermite_analytic) {
    for (std::size_t j = 0; j < n; ++j) values[j] = (*this)(cplx(rule->nodes[j], 0.0));
  } else {
    if (!same_rule(*basis_->grid, *rule)) {
      fail(ErrorCode::structure, "sample_on: numeric basis is only known on its own grid");
    }
    for (const auto& t : terms_) {
      for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
        const auto& v = basis_->vectors[k];
        for (std::size_t j = 0; j < n; ++j) values[j] += t.coeffs[k] * v[j];
      }
    }
  }
  return from_samples(rule, std::move(values));
}

FunctionRep FunctionRep::shifted(double ds) const {
  if (form_ != Form::coefficients || basis_->kind != BasisSet::Kind::hermite_analytic) {
    fail(ErrorCode::structure, "shifted: complex translation needs a Hermite coefficient form");
  }
  FunctionRep out = *this;
  for (auto& t : out.terms_) {
    t.shift += ds;
    if (std::abs(t.shift) > basis_->max_imag) {
      std::ostringstream os;
      os << "shifted: |Im| shift " << std::abs(t.shift) << " exceeds bound " << basis_->max_imag;
      fail(ErrorCode::magnitude, os.str());
    }
  }
  out.normalize_terms();
  return out;
}

bool FunctionRep::compatible_with(const FunctionRep& other) const {
  if (form_ != other.form_) return false;
  if (form_ == Form::coefficients) return same_basis(*basis_, *other.basis_);
  return same_rule(*rule_, *other.rule_);
}

FunctionRep& FunctionRep::operator+=(const FunctionRep& other) {
  if (!compatible_with(other)) {
    fail(ErrorCode::structure, "linear combination of incompatible representations");
  }
  if (form_ == Form::samples) {
    for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] += other.samples_[j];
  } else {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize_terms();
  }
  return *this;
}

FunctionRep& FunctionRep::operator-=(const FunctionRep& other) {
  FunctionRep neg = other;
  neg *= -1.0;
  return *this += neg;
}

FunctionRep& FunctionRep::operator*=(cplx s) {
  if (form_ == Form::samples) {
    for (auto& v : samples_) v *= s;
  } else {
    for (auto& t : terms_) {
      for (auto& c : t.coeffs) c *= s;
    }
    normalize_terms();
  }
  return *this;
}

void FunctionRep::normalize_terms() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const ShiftedTerm& a, const ShiftedTerm& b) { return a.shift < b.shift; });
  std::vector<ShiftedTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && std::abs(merged.back().shift - t.shift) <= kShiftMergeTol) {
      auto& dst = merged.back().coeffs;
      if (dst.size() < t.coeffs.size()) dst.resize(t.coeffs.size(), cplx(0.0));
      for (std::size_t k = 0; k < t.coeffs.size(); ++k) dst[k] += t.coeffs[k];
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const ShiftedTerm& t) { return all_zero(t.coeffs); });
  terms_ = std::move(merged);
}

FunctionRep linear_combination(std::span<const cplx> c, std::span<const FunctionRep> family) {
  if (family.empty() || c.size() > family.size()) {
    fail(ErrorCode::structure, "linear_combination: need a nonempty family covering all coefficients");
  }
  FunctionRep out = cplx(0.0) * family[0];
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] != cplx(0.0)) out += c[n] * family[n];
  }
  return out;
}

} // namespace grslab
