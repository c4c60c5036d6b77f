#ifndef NPSVM_PENALTY_HPP
#define NPSVM_PENALTY_HPP

#include <span>
#include <string>
#include <string_view>

#include "npsvm/errors.hpp"

namespace npsvm {

enum class PenaltyKind { lsp, scad, mcp, capped_l1 };

std::string_view to_string(PenaltyKind k);
PenaltyKind penalty_kind_from_string(std::string_view name);  // "lsp", "scad", "mcp", "capped_l1"

// A sparsity-inducing nonconvex penalty p(w):
//
//   lsp        lambda * log(1 + |w|/theta)
//   scad       lambda*|w|                                   |w| <= lambda
//              (-w^2 + 2*theta*lambda*|w| - lambda^2)
//                / (2*(theta-1))                 lambda < |w| <= theta*lambda
//              (theta+1)*lambda^2 / 2                       |w| > theta*lambda
//   mcp        lambda*|w| - w^2/(2*theta)                   |w| <= theta*lambda
//              theta*lambda^2 / 2                           |w| > theta*lambda
//   capped_l1  lambda * min(|w|, theta)
//
// lambda > 0 and theta > 0 always; scad additionally needs theta > 2.
struct PenaltyConfig {
  PenaltyKind kind = PenaltyKind::scad;
  double lambda = 0.015625;
  double theta = 3.7;

  void validate() const;  // throws config_error
};

// p(w) for a single coefficient; even in w, zero at zero, nondecreasing in |w|.
double penalty_value(const PenaltyConfig& cfg, double w);

// Sum of penalty_value over a vector.
double penalty_total(const PenaltyConfig& cfg, std::span<const double> z);

}  // namespace npsvm

#endif
