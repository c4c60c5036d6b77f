#ifndef NPSVM_ADMM_HPP
#define NPSVM_ADMM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "npsvm/dataset.hpp"
#include "npsvm/h_operator.hpp"
#include "npsvm/penalty.hpp"
#include "npsvm/wsolve.hpp"

namespace npsvm {

struct SolverConfig {
  PenaltyConfig penalty;
  double rho1 = 1.0;
  double rho2 = 1.0;
  double beta = 0.0;       // proximal damping of the z-step; 0 = plain scheme
  double epsilon = 1e-4;   // relative objective-change tolerance
  std::size_t max_iters = 1000;
  std::uint64_t seed = 0;  // recorded in outputs; the solve itself is deterministic

  std::optional<FactorBranch> force_branch;  // test hook, forwarded to build_cache
  std::size_t dense_dim_cap = 20000;
  bool diagnostics = false;  // track per-iteration stationarity and descent

  void validate() const;  // throws config_error
};

// Full iterate. xi and s are nonnegative at every iteration boundary; u and v
// are the scaled duals (multiplier / rho1 and multiplier / rho2).
struct SolverState {
  std::vector<double> w, z, u;   // length d
  std::vector<double> xi, s, v;  // length n
  double b = 0.0;
  std::size_t iter = 0;
};

struct TraceRecord {
  std::size_t iter = 0;
  double objective = 0.0;     // (1/n) sum(xi) + P(z)
  double rel_change = 0.0;    // |obj_k+1 - obj_k| / max(|obj_k|, 1e-12)
  double res_wz = 0.0;        // ||w - z||_2
  double res_cons = 0.0;      // ||H w + b y + xi - s - 1||_2
  double state_delta = 0.0;   // ||iterate - previous iterate||_2, all blocks
  double wall_time_s = 0.0;   // elapsed since the iteration stage started
};

enum class StopReason { tolerance, max_iters };
std::string_view to_string(StopReason r);

// Per-iteration invariant tracking, filled when SolverConfig::diagnostics.
struct DiagnosticsSummary {
  // max over iterations of ||grad_w L||_inf / (1 + ||f||_inf), taken right
  // after the w-step (all other blocks still at their pre-step values)
  double max_w_stationarity = 0.0;
  // max over iterations of |y^T (H w + b y + xi - s - 1 + v)| after the b-step
  double max_b_orthogonality = 0.0;
  // max over iterations of L(after primal sweep) - L(before sweep), duals fixed
  double max_descent_violation = 0.0;
  std::size_t iterations_checked = 0;
};

struct FitReport {
  std::vector<double> w;
  double b = 0.0;
  std::size_t iterations = 0;
  StopReason terminated_by = StopReason::max_iters;
  double precompute_seconds = 0.0;
  double iterate_seconds = 0.0;
  double true_objective = 0.0;  // penalized hinge loss of (w, b) on the data
  std::vector<TraceRecord> trace;
  std::optional<DiagnosticsSummary> diagnostics;
};

// All-zero starting point (w, b, z, xi, s, u, v = 0).
SolverState initialize(std::size_t n, std::size_t d);

// One sub-step each; hw must hold H * state.w for the w already updated this
// iteration. Each function uses exactly the mix of current and previous
// blocks that the update order implies (see fit).
double update_b(const SolverState& st, std::span<const double> hw,
                std::span<const double> y);
void update_z(SolverState& st, const SolverConfig& cfg);
void update_xi(SolverState& st, std::span<const double> hw, std::span<const double> y,
               double rho2);
void update_s(SolverState& st, std::span<const double> hw, std::span<const double> y);
void update_duals(SolverState& st, std::span<const double> hw, std::span<const double> y);

// Surrogate objective used by the stopping rule: (1/n) 1^T xi + P(z).
double objective(const SolverState& st, const PenaltyConfig& penalty);

// The model objective: (1/n) sum_i max(0, 1 - y_i (w^T x_i + b)) + P(w).
double true_objective(std::span<const double> w, double b, const Dataset& ds,
                      const PenaltyConfig& penalty);

// Augmented Lagrangian in scaled form, with the -rho/2 ||dual||^2 constants
// restored so values are comparable across iterates at fixed duals:
//   (1/n) 1^T xi + P(z) + rho1/2 ||w-z+u||^2 + rho2/2 ||Hw+by+xi-s-1+v||^2
//   - rho1/2 ||u||^2 - rho2/2 ||v||^2
double augmented_lagrangian(const SolverState& st, const SolverConfig& cfg,
                            const HOperator& h);

// Runs the full method: one-time Gram/Cholesky pre-computation, then the
// w, b, z, xi, s, u, v sweep until the relative objective change drops below
// epsilon or max_iters is reached. Throws solver_error on factorization
// failure or if any iterate turns non-finite.
FitReport fit(const Dataset& ds, const SolverConfig& cfg);

}  // namespace npsvm

#endif
