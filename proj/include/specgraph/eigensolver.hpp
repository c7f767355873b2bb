#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "specgraph/errors.hpp"

namespace specgraph {

// Dense symmetric eigenvalue solver, eigenvalues only: Householder reduction
// to tridiagonal form followed by the QL algorithm with implicit shifts.
// Transform accumulation is skipped throughout, which roughly halves the
// work relative to the eigenvector-producing variant.

namespace detail {

// Reduces the symmetric matrix a (row-major n*n, lower triangle read) to
// tridiagonal form. On return d holds the diagonal and e[1..n-1] the
// subdiagonal; a is destroyed.
inline void householder_tridiagonalize(std::vector<double>& a, int n,
                                       std::vector<double>& d,
                                       std::vector<double>& e) {
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    double* row_i = a.data() + static_cast<std::size_t>(i) * n;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::fabs(row_i[k]);
      if (scale == 0.0) {
        e[i] = row_i[l];
      } else {
        for (int k = 0; k <= l; ++k) {
          row_i[k] /= scale;
          h += row_i[k] * row_i[k];
        }
        double f = row_i[l];
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        row_i[l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          const double* row_j = a.data() + static_cast<std::size_t>(j) * n;
          double sum = 0.0;
          for (int k = 0; k <= j; ++k) sum += row_j[k] * row_i[k];
          for (int k = j + 1; k <= l; ++k)
            sum += a[static_cast<std::size_t>(k) * n + j] * row_i[k];
          e[j] = sum / h;
          f += e[j] * row_i[j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = row_i[j];
          const double g2 = e[j] - hh * f;
          e[j] = g2;
          double* row_j = a.data() + static_cast<std::size_t>(j) * n;
          for (int k = 0; k <= j; ++k) row_j[k] -= f * e[k] + g2 * row_i[k];
        }
      }
    } else {
      e[i] = row_i[l];
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) d[i] = a[static_cast<std::size_t>(i) * n + i];
}

// QL iteration with implicit shifts on the tridiagonal matrix (d, e).
// e[0] is unused on input. Eigenvalues replace d, unsorted.
inline void tql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                               int n, int max_iterations) {
  if (n <= 1) return;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
          break;
      }
      if (m != l) {
        if (iterations++ == max_iterations)
          throw numeric_error(
              "eigensolver failed to converge after " +
              std::to_string(max_iterations) + " iterations at index " +
              std::to_string(l));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
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
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Eigenvalues of the symmetric matrix a (row-major n*n; only the lower
/// triangle is read), ascending. a is destroyed.
inline std::vector<double> symmetric_eigenvalues(std::vector<double>& a, int n,
                                                 int max_iterations = 50) {
  if (n < 1) throw std::invalid_argument("eigensolver needs n >= 1");
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix storage size mismatch");
  std::vector<double> d(n), e(n);
  detail::householder_tridiagonalize(a, n, d, e);
  detail::tql_implicit_shift(d, e, n, max_iterations);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace specgraph
