#ifndef NPSVM_PROX_HPP
#define NPSVM_PROX_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "npsvm/penalty.hpp"

namespace npsvm {

// The scalar subproblem  min_z  h(z) = (z - psi)^2 / 2 + p(z) / rho1.
struct ProxProblem {
  double psi = 0.0;
  double rho1 = 1.0;
  PenaltyConfig penalty;
};

// h(z) evaluated exactly (never a rescaled surrogate).
double prox_objective(const ProxProblem& p, double z);

// Global minimizer of h via the penalty's finite candidate set. Candidates
// are built from |psi| and the sign is restored afterwards; ties in h go to
// the candidate of smaller magnitude. The interior stationary points use the
// exact derivative roots:
//   scad middle piece: (rho1*(theta-1)*|psi| - theta*lambda) / (rho1*(theta-1) - 1)
//   mcp  inner piece:  theta*(rho1*|psi| - lambda) / (rho1*theta - 1)
// and are skipped when the denominator is nonpositive (the piece is then
// concave and its endpoints, already in the set, dominate).
double prox(const ProxProblem& p);

// Element-wise prox of a whole vector (OpenMP-parallel): out[i] solves the
// scalar problem with psi = target[i].
void prox_vector(std::span<const double> target, double rho1, const PenaltyConfig& cfg,
                 std::span<double> out);
std::vector<double> prox_vector(std::span<const double> target, double rho1,
                                const PenaltyConfig& cfg);

// Argmin of fn over a uniform grid on [lo, hi], sharpened by `refines` rounds
// of windowed re-gridding around the incumbent.
double grid_minimize(const std::function<double(double)>& fn, double lo, double hi,
                     std::size_t points, int refines);

// Independent brute-force minimizer of h over [-halfwidth, halfwidth]: a
// uniform grid of grid_points followed by two local refinements (final
// resolution <= 1e-7 for the documented halfwidths). Evaluates h only through
// penalty_value, so it shares nothing with the candidate-set path above.
// Requires halfwidth >= |psi| + lambda/rho1 + theta + 1 and grid_points >= 1e5.
double prox_oracle(const ProxProblem& p, double halfwidth, std::size_t grid_points);

// Convenience overload using the smallest admissible halfwidth and 1e5 points.
double prox_oracle(const ProxProblem& p);

}  // namespace npsvm

#endif
