#include "npsvm/prox.hpp"

#include <algorithm>
#include <cmath>

namespace npsvm {

double prox_objective(const ProxProblem& p, double z) {
  const double r = z - p.psi;
  return 0.5 * r * r + penalty_value(p.penalty, z) / p.rho1;
}

namespace {

// Picks the candidate with the smallest h; ties go to the smaller magnitude.
class BestPick {
 public:
  explicit BestPick(const ProxProblem& p) : p_(p) {}
  void offer(double z) {
    const double h = prox_objective(p_, z);
    if (!have_ || h < best_h_ || (h == best_h_ && std::abs(z) < std::abs(best_z_))) {
      best_h_ = h;
      best_z_ = z;
      have_ = true;
    }
  }
  double value() const { return best_z_; }

 private:
  const ProxProblem& p_;
  double best_h_ = 0.0, best_z_ = 0.0;
  bool have_ = false;
};

inline double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

double prox(const ProxProblem& p) {
  p.penalty.validate();
  if (!(p.rho1 > 0.0) || !std::isfinite(p.rho1)) throw config_error("rho1 must be > 0");

  const double a = std::abs(p.psi);
  const double sgn = p.psi < 0.0 ? -1.0 : 1.0;
  const double lam = p.penalty.lambda, th = p.penalty.theta, rho = p.rho1;
  BestPick pick(p);

  switch (p.penalty.kind) {
    case PenaltyKind::lsp: {
      pick.offer(0.0);
      const double disc = rho * rho * (a - th) * (a - th) - 4.0 * rho * (lam - rho * a * th);
      if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        pick.offer(sgn * std::max((rho * (a - th) + sq) / (2.0 * rho), 0.0));
        pick.offer(sgn * std::max((rho * (a - th) - sq) / (2.0 * rho), 0.0));
      }
      break;
    }
    case PenaltyKind::scad: {
      pick.offer(sgn * std::min(lam, std::max(0.0, a - lam / rho)));
      const double den = rho * (th - 1.0) - 1.0;
      if (den > 0.0)
        pick.offer(sgn * clamp((rho * a * (th - 1.0) - th * lam) / den, lam, th * lam));
      pick.offer(sgn * std::max(th * lam, a));
      break;
    }
    case PenaltyKind::mcp: {
      pick.offer(0.0);
      pick.offer(sgn * th * lam);
      const double den = rho * th - 1.0;
      if (den > 0.0) pick.offer(sgn * clamp(th * (rho * a - lam) / den, 0.0, th * lam));
      pick.offer(sgn * std::max(th * lam, a));
      break;
    }
    case PenaltyKind::capped_l1: {
      pick.offer(sgn * std::max(th, a));
      pick.offer(sgn * std::min(th, std::max(0.0, a - lam / rho)));
      break;
    }
  }
  return pick.value();
}

void prox_vector(std::span<const double> target, double rho1, const PenaltyConfig& cfg,
                 std::span<double> out) {
  cfg.validate();
  if (!(rho1 > 0.0)) throw config_error("rho1 must be > 0");
  const auto d = static_cast<std::ptrdiff_t>(target.size());
#pragma omp parallel for schedule(static) if (d > 256)
  for (std::ptrdiff_t i = 0; i < d; ++i)
    out[i] = prox(ProxProblem{target[i], rho1, cfg});
}

std::vector<double> prox_vector(std::span<const double> target, double rho1,
                                const PenaltyConfig& cfg) {
  std::vector<double> out(target.size());
  prox_vector(target, rho1, cfg, out);
  return out;
}

double grid_minimize(const std::function<double(double)>& fn, double lo, double hi,
                     std::size_t points, int refines) {
  double best_x = lo, best_f = fn(lo);
  double step = 0.0;
  for (int round = 0; round <= refines; ++round) {
    const std::size_t pts = (round == 0) ? points : 2001;
    step = (hi - lo) / static_cast<double>(pts - 1);
    for (std::size_t i = 0; i < pts; ++i) {
      const double x = lo + step * static_cast<double>(i);
      const double f = fn(x);
      if (f < best_f || (f == best_f && std::abs(x) < std::abs(best_x))) {
        best_f = f;
        best_x = x;
      }
    }
    lo = best_x - step;
    hi = best_x + step;
  }
  return best_x;
}

double prox_oracle(const ProxProblem& p, double halfwidth, std::size_t grid_points) {
  p.penalty.validate();
  const double needed = std::abs(p.psi) + p.penalty.lambda / p.rho1 + p.penalty.theta + 1.0;
  if (halfwidth < needed) throw config_error("oracle halfwidth too small");
  if (grid_points < 100000) throw config_error("oracle needs at least 1e5 grid points");
  return grid_minimize([&](double z) { return prox_objective(p, z); }, -halfwidth, halfwidth,
                       grid_points, 2);
}

double prox_oracle(const ProxProblem& p) {
  const double hw = std::abs(p.psi) + p.penalty.lambda / p.rho1 + p.penalty.theta + 1.0;
  return prox_oracle(p, hw, 100000);
}

}  // namespace npsvm
