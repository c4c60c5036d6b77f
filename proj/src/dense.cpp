#include "npsvm/dense.hpp"

#include <cmath>
#include <cstddef>

namespace npsvm {

bool cholesky_inplace(DenseMatrix& a) {
  const std::size_t m = a.rows();
  for (std::size_t j = 0; j < m; ++j) {
    double piv = a(j, j);
    const double* rowj = a.row(j);
    for (std::size_t k = 0; k < j; ++k) piv -= rowj[k] * rowj[k];
    if (!(piv > 0.0) || !std::isfinite(piv)) return false;
    piv = std::sqrt(piv);
    a(j, j) = piv;
    const double inv = 1.0 / piv;
    const auto mm = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (m - j > 128)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(j) + 1; i < mm; ++i) {
      double acc = a(i, j);
      const double* rowi = a.row(i);
      for (std::size_t k = 0; k < j; ++k) acc -= rowi[k] * rowj[k];
      a(i, j) = acc * inv;
    }
  }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r + 1; c < m; ++c) a(r, c) = 0.0;
  return true;
}

void cholesky_solve(const DenseMatrix& l, std::span<double> b) {
  const std::size_t m = l.rows();
  for (std::size_t i = 0; i < m; ++i) {
    double acc = b[i];
    const double* rowi = l.row(i);
    for (std::size_t k = 0; k < i; ++k) acc -= rowi[k] * b[k];
    b[i] = acc / rowi[i];
  }
  for (std::size_t ii = m; ii-- > 0;) {
    double acc = b[ii];
    for (std::size_t k = ii + 1; k < m; ++k) acc -= l(k, ii) * b[k];
    b[ii] = acc / l(ii, ii);
  }
}

namespace serial {

bool cholesky_inplace(DenseMatrix& a) {
  const std::size_t m = a.rows();
  for (std::size_t j = 0; j < m; ++j) {
    double piv = a(j, j);
    for (std::size_t k = 0; k < j; ++k) piv -= a(j, k) * a(j, k);
    if (!(piv > 0.0) || !std::isfinite(piv)) return false;
    piv = std::sqrt(piv);
    a(j, j) = piv;
    for (std::size_t i = j + 1; i < m; ++i) {
      double acc = a(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= a(i, k) * a(j, k);
      a(i, j) = acc / piv;
    }
  }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r + 1; c < m; ++c) a(r, c) = 0.0;
  return true;
}

}  // namespace serial

}  // namespace npsvm
