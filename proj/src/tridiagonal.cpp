#include "grslab/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "grslab/error.hpp"

namespace grslab {

std::vector<double> tridiagonal_eigenvalues(const SymTridiagonal& t) {
  const int n = static_cast<int>(t.size());
  std::vector<double> d = t.diag;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = t.off[i];
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == 60) {
        std::ostringstream os;
        os << "tridiagonal_eigenvalues: no convergence for eigenvalue " << l;
        fail(ErrorCode::numeric, os.str());
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t sturm_count(const SymTridiagonal& t, double x) {
  const std::size_t n = t.size();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : coupling / q);
    if (q == 0.0) q = -std::numeric_limits<double>::min();
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

// Partial-pivot LU of a general tridiagonal matrix, LAPACK gttrf layout.
struct TridiagonalLU {
  std::vector<double> dl, d, du, du2;
  std::vector<int> pivot; // 0 = no swap, 1 = rows i, i+1 swapped

  TridiagonalLU(const SymTridiagonal& t, double shift) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    dl = t.off;
    du = t.off;
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    pivot.assign(n > 0 ? n - 1 : 0, 0);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
    for (double v : t.off) scale = std::max(scale, std::abs(v));
    const double tiny = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        pivot[i] = 1;
      }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (pivot[i] == 0) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t k = n - 2; k-- > 0;) {
      b[k] = (b[k] - du[k] * b[k + 1] - du2[k] * b[k + 2]) / d[k];
    }
  }
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

} // namespace

TridiagonalEigenpairs tridiagonal_lowest(const SymTridiagonal& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k > n) fail(ErrorCode::domain, "tridiagonal_lowest: more eigenpairs requested than rows");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
    norm = std::max(norm, std::abs(t.diag[i]) + r);
  }

  TridiagonalEigenpairs out;
  for (std::size_t j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.values.push_back(0.5 * (a + b));
  }

  constexpr double kResidualTol = 1e-10;
  for (std::size_t j = 0; j < k; ++j) {
    const double lambda = out.values[j];
    const TridiagonalLU lu(t, lambda);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * std::sin(static_cast<double>(i) + 0.5);
    double residual = 0.0;
    for (int it = 0; it < 6; ++it) {
      lu.solve(v);
      for (const auto& u : out.vectors) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
      const double nv = norm2(v);
      if (!(nv > 0.0) || !std::isfinite(nv)) break;
      for (double& x : v) x /= nv;

      residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double tv = (t.diag[i] - lambda) * v[i];
        if (i > 0) tv += t.off[i - 1] * v[i - 1];
        if (i + 1 < n) tv += t.off[i] * v[i + 1];
        residual += tv * tv;
      }
      residual = std::sqrt(residual);
      if (it >= 1 && residual <= kResidualTol * std::max(norm, 1.0)) break;
    }
    if (!(residual <= kResidualTol * std::max(norm, 1.0))) {
      std::ostringstream os;
      os << "tridiagonal_lowest: inverse iteration did not converge for eigenpair " << j
         << " (residual " << residual << ")";
      fail(ErrorCode::numeric, os.str());
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

} // namespace grslab
