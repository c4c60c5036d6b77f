#include "npsvm/penalty.hpp"

#include <cmath>

namespace npsvm {

std::string_view to_string(PenaltyKind k) {
  switch (k) {
    case PenaltyKind::lsp: return "lsp";
    case PenaltyKind::scad: return "scad";
    case PenaltyKind::mcp: return "mcp";
    case PenaltyKind::capped_l1: return "capped_l1";
  }
  return "?";
}

PenaltyKind penalty_kind_from_string(std::string_view name) {
  if (name == "lsp") return PenaltyKind::lsp;
  if (name == "scad") return PenaltyKind::scad;
  if (name == "mcp") return PenaltyKind::mcp;
  if (name == "capped_l1") return PenaltyKind::capped_l1;
  throw config_error("unknown penalty '" + std::string(name) +
                     "' (expected lsp, scad, mcp or capped_l1)");
}

void PenaltyConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw config_error("lambda must be > 0");
  if (!(theta > 0.0) || !std::isfinite(theta)) throw config_error("theta must be > 0");
  if (kind == PenaltyKind::scad && !(theta > 2.0))
    throw config_error("scad requires theta > 2");
}

double penalty_value(const PenaltyConfig& cfg, double w) {
  const double a = std::abs(w);
  const double lam = cfg.lambda, th = cfg.theta;
  switch (cfg.kind) {
    case PenaltyKind::lsp:
      return lam * std::log1p(a / th);
    case PenaltyKind::scad:
      if (a <= lam) return lam * a;
      if (a <= th * lam) return (-a * a + 2.0 * th * lam * a - lam * lam) / (2.0 * (th - 1.0));
      return (th + 1.0) * lam * lam / 2.0;
    case PenaltyKind::mcp:
      if (a <= th * lam) return lam * a - a * a / (2.0 * th);
      return th * lam * lam / 2.0;
    case PenaltyKind::capped_l1:
      return lam * std::min(a, th);
  }
  return 0.0;
}

double penalty_total(const PenaltyConfig& cfg, std::span<const double> z) {
  double acc = 0.0;
  for (double zi : z) acc += penalty_value(cfg, zi);
  return acc;
}

}  // namespace npsvm
