#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace yokegrip {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gaussian elimination with partial pivoting for small dense systems.
// `a` is row-major n x n. Throws SingularMatrixError with the offending
// pivot column when the matrix is numerically singular.
inline std::vector<double> solve_dense(std::size_t n, std::vector<double> a, std::vector<double> b) {
  if (a.size() != n * n || b.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  const double tiny = scale * 1e-14;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) pivot = r;
    if (std::fabs(a[pivot * n + col]) <= tiny)
      throw SingularMatrixError("solve_dense: singular matrix at column " + std::to_string(col) +
                                " (pivot " + std::to_string(a[pivot * n + col]) + ")");
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      a[r * n + col] = 0.0;
      for (std::size_t c = col + 1; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
    x[i] = s / a[i * n + i];
  }
  return x;
}

}  // namespace yokegrip
