#ifndef NPSVM_WSOLVE_HPP
#define NPSVM_WSOLVE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "npsvm/dense.hpp"
#include "npsvm/h_operator.hpp"

namespace npsvm {

// Which regularized Gram matrix is factorized once and cached:
//   tall_data (n >= d): C = rho*I_d + H^T H          (d x d)
//   wide_data (d > n):  C = I_n + (1/rho)*H H^T      (n x n)
// with rho = rho1/rho2. Both are symmetric positive definite for rho > 0.
enum class FactorBranch { tall_data, wide_data };

struct FactorCache {
  FactorBranch branch = FactorBranch::tall_data;
  double rho = 1.0;
  std::size_t n = 0, d = 0;
  DenseMatrix chol;  // lower Cholesky factor of C
};

// Forms C sparse-aware (via X^T X or the sign-folded X X^T) and factorizes it
// once. force_branch overrides the n >= d rule (both branches are valid for
// any shape; the override exists so tests can compare the two paths on the
// same problem). If the first factorization fails numerically, a diagonal
// jitter of 1e-10 * trace(C)/dim is added once and the factorization retried.
// Dense Gram storage is refused above dense_dim_cap (solver_error).
FactorCache build_cache(const HOperator& h, double rho1, double rho2,
                        std::optional<FactorBranch> force_branch = std::nullopt,
                        std::size_t dense_dim_cap = 20000);

// Solves (rho*I_d + H^T H) w = f using the cached factorization:
//   tall_data: two triangular solves on the d x d factor,
//   wide_data: w = f/rho - H^T ( C^{-1} (H f) ) / rho^2,
// which costs O(dn) per call on the wide branch.
void solve_w(const FactorCache& cache, const HOperator& h, std::span<const double> f,
             std::span<double> w_out);
std::vector<double> solve_w(const FactorCache& cache, const HOperator& h,
                            std::span<const double> f);

// Reference path: materializes the dense d x d system
// (rho1*I + rho2*H^T H) w = f_unscaled and solves it directly, exploiting no
// structure. Kept for equivalence tests and timing comparisons; intended for
// small d.
std::vector<double> solve_w_naive(const Dataset& ds, double rho1, double rho2,
                                  std::span<const double> f_unscaled);

// f = rho*(z - u) + H^T (s + 1 - xi - v - b*y), the right-hand side of the
// w-system assembled from the current iterate.
std::vector<double> assemble_f(std::span<const double> z, std::span<const double> u,
                               std::span<const double> s, std::span<const double> xi,
                               std::span<const double> v, double b, const HOperator& h,
                               double rho);

}  // namespace npsvm

#endif
