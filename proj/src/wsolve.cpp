#include "npsvm/wsolve.hpp"

#include <cmath>
#include <string>

#include "npsvm/errors.hpp"
#include "npsvm/kernels.hpp"

namespace npsvm {

FactorCache build_cache(const HOperator& h, double rho1, double rho2,
                        std::optional<FactorBranch> force_branch, std::size_t dense_dim_cap) {
  if (!(rho1 > 0.0) || !(rho2 > 0.0)) throw config_error("rho1 and rho2 must be > 0");
  const std::size_t n = h.rows(), d = h.cols();
  FactorCache cache;
  cache.rho = rho1 / rho2;
  cache.n = n;
  cache.d = d;
  cache.branch = force_branch.value_or(n >= d ? FactorBranch::tall_data
                                              : FactorBranch::wide_data);

  const std::size_t dim = (cache.branch == FactorBranch::tall_data) ? d : n;
  if (dim > dense_dim_cap)
    throw solver_error("Gram dimension " + std::to_string(dim) + " exceeds the dense cap " +
                       std::to_string(dense_dim_cap) +
                       "; raise dense_dim_cap only if memory allows");

  DenseMatrix c(dim, dim);
  if (cache.branch == FactorBranch::tall_data) {
    // C = rho*I_d + H^T H, and H^T H = X^T X because Y^2 = I
    kernels::gram_xtx(h.dataset().features, h.x_transpose(), c);
    for (std::size_t j = 0; j < dim; ++j) c(j, j) += cache.rho;
  } else {
    // C = I_n + (1/rho) * H H^T, with H H^T = Y (X X^T) Y
    kernels::gram_xxt(h.dataset().features, h.labels(), c);
    const double inv_rho = 1.0 / cache.rho;
    for (auto& v : c.data()) v *= inv_rho;
    for (std::size_t i = 0; i < dim; ++i) c(i, i) += 1.0;
  }

  DenseMatrix attempt = c;
  if (!cholesky_inplace(attempt)) {
    // SPD in exact arithmetic; retry once with a tiny diagonal shift before
    // giving up
    double trace = 0.0;
    for (std::size_t j = 0; j < dim; ++j) trace += c(j, j);
    const double jitter = 1e-10 * trace / static_cast<double>(dim);
    for (std::size_t j = 0; j < dim; ++j) c(j, j) += jitter;
    attempt = c;
    if (!cholesky_inplace(attempt))
      throw solver_error("Cholesky factorization failed even after adding diagonal jitter " +
                         std::to_string(jitter));
  }
  cache.chol = std::move(attempt);
  return cache;
}

void solve_w(const FactorCache& cache, const HOperator& h, std::span<const double> f,
             std::span<double> w_out) {
  if (f.size() != cache.d || w_out.size() != cache.d)
    throw error("solve_w: right-hand side length must equal d");
  if (cache.branch == FactorBranch::tall_data) {
    std::copy(f.begin(), f.end(), w_out.begin());
    cholesky_solve(cache.chol, w_out);
  } else {
    std::vector<double> t = h.apply(f);  // H f
    cholesky_solve(cache.chol, t);       // C^{-1} (H f)
    h.apply_transpose(t, w_out);         // H^T (...)
    const double inv_rho = 1.0 / cache.rho;
    for (std::size_t j = 0; j < cache.d; ++j)
      w_out[j] = f[j] * inv_rho - w_out[j] * inv_rho * inv_rho;
  }
}

std::vector<double> solve_w(const FactorCache& cache, const HOperator& h,
                            std::span<const double> f) {
  std::vector<double> w(cache.d);
  solve_w(cache, h, f, w);
  return w;
}

std::vector<double> solve_w_naive(const Dataset& ds, double rho1, double rho2,
                                  std::span<const double> f_unscaled) {
  if (!(rho1 > 0.0) || !(rho2 > 0.0)) throw config_error("rho1 and rho2 must be > 0");
  const std::size_t n = ds.n(), d = ds.dim();
  if (f_unscaled.size() != d) throw error("solve_w_naive: rhs length must equal d");

  // densify X^T, then A = rho1*I + rho2 * X^T X with plain dense dot products
  DenseMatrix xt(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    const SparseMatrix& m = ds.features;
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
      xt(m.col_indices[k], i) = m.values[k];
  }
  DenseMatrix a(d, d);
  const auto dd = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t j = 0; j < dd; ++j) {
    for (std::size_t k = static_cast<std::size_t>(j); k < d; ++k) {
      double acc = 0.0;
      const double* rj = xt.row(j);
      const double* rk = xt.row(k);
      for (std::size_t i = 0; i < n; ++i) acc += rj[i] * rk[i];
      a(j, k) = rho2 * acc;
    }
    a(j, j) += rho1;
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) a(k, j) = a(j, k);

  if (!cholesky_inplace(a)) throw solver_error("naive dense solve failed (matrix not SPD?)");
  std::vector<double> w(f_unscaled.begin(), f_unscaled.end());
  cholesky_solve(a, w);
  return w;
}

std::vector<double> assemble_f(std::span<const double> z, std::span<const double> u,
                               std::span<const double> s, std::span<const double> xi,
                               std::span<const double> v, double b, const HOperator& h,
                               double rho) {
  const std::size_t n = h.rows(), d = h.cols();
  if (z.size() != d || u.size() != d || s.size() != n || xi.size() != n || v.size() != n)
    throw error("assemble_f: inconsistent dimensions");
  std::vector<double> g(n);
  const auto y = h.labels();
  for (std::size_t i = 0; i < n; ++i) g[i] = s[i] + 1.0 - xi[i] - v[i] - b * y[i];
  std::vector<double> f = h.apply_transpose(g);
  for (std::size_t j = 0; j < d; ++j) f[j] += rho * (z[j] - u[j]);
  return f;
}

}  // namespace npsvm
