#include "npsvm/admm.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "npsvm/errors.hpp"
#include "npsvm/prox.hpp"

namespace npsvm {

namespace {

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double norm2_diff(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double norm_inf(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::string_view to_string(StopReason r) {
  return r == StopReason::tolerance ? "tolerance" : "max_iters";
}

void SolverConfig::validate() const {
  penalty.validate();
  if (!(rho1 > 0.0) || !std::isfinite(rho1)) throw config_error("rho1 must be > 0");
  if (!(rho2 > 0.0) || !std::isfinite(rho2)) throw config_error("rho2 must be > 0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw config_error("beta must be >= 0");
  if (!(epsilon > 0.0)) throw config_error("epsilon must be > 0");
  if (max_iters < 1) throw config_error("max_iters must be >= 1");
}

SolverState initialize(std::size_t n, std::size_t d) {
  SolverState st;
  st.w.assign(d, 0.0);
  st.z.assign(d, 0.0);
  st.u.assign(d, 0.0);
  st.xi.assign(n, 0.0);
  st.s.assign(n, 0.0);
  st.v.assign(n, 0.0);
  st.b = 0.0;
  st.iter = 0;
  return st;
}

double update_b(const SolverState& st, std::span<const double> hw, std::span<const double> y) {
  // b = y^T (s + 1 - Hw - xi - v) / (y^T y), and y^T y = n exactly
  const std::size_t n = y.size();
  double num = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    num += y[i] * (st.s[i] + 1.0 - hw[i] - st.xi[i] - st.v[i]);
  return num / static_cast<double>(n);
}

void update_z(SolverState& st, const SolverConfig& cfg) {
  const std::size_t d = st.z.size();
  std::vector<double> target(d);
  if (cfg.beta == 0.0) {
    for (std::size_t j = 0; j < d; ++j) target[j] = st.w[j] + st.u[j];
    prox_vector(target, cfg.rho1, cfg.penalty, st.z);
  } else {
    // the beta quadratic merges with the rho1 one: effective modulus
    // rho1 + beta, effective target the modulus-weighted mean
    const double mod = cfg.rho1 + cfg.beta;
    for (std::size_t j = 0; j < d; ++j)
      target[j] = (cfg.rho1 * (st.w[j] + st.u[j]) + cfg.beta * st.z[j]) / mod;
    prox_vector(target, mod, cfg.penalty, st.z);
  }
}

void update_xi(SolverState& st, std::span<const double> hw, std::span<const double> y,
               double rho2) {
  const std::size_t n = st.xi.size();
  const double shift = 1.0 / (static_cast<double>(n) * rho2);
  for (std::size_t i = 0; i < n; ++i) {
    const double half = st.s[i] + 1.0 - st.v[i] - hw[i] - st.b * y[i] - shift;
    st.xi[i] = std::max(half, 0.0);
  }
}

void update_s(SolverState& st, std::span<const double> hw, std::span<const double> y) {
  const std::size_t n = st.s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double half = hw[i] + st.b * y[i] + st.xi[i] - 1.0 + st.v[i];
    st.s[i] = std::max(half, 0.0);
  }
}

void update_duals(SolverState& st, std::span<const double> hw, std::span<const double> y) {
  for (std::size_t j = 0; j < st.u.size(); ++j) st.u[j] += st.w[j] - st.z[j];
  for (std::size_t i = 0; i < st.v.size(); ++i)
    st.v[i] += st.xi[i] - st.s[i] + hw[i] + st.b * y[i] - 1.0;
}

double objective(const SolverState& st, const PenaltyConfig& penalty) {
  double hinge = 0.0;
  for (double xi : st.xi) hinge += xi;
  return hinge / static_cast<double>(st.xi.size()) + penalty_total(penalty, st.z);
}

double true_objective(std::span<const double> w, double b, const Dataset& ds,
                      const PenaltyConfig& penalty) {
  const SparseMatrix& m = ds.features;
  double hinge = 0.0;
  for (std::size_t i = 0; i < ds.n(); ++i) {
    double margin = b;
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
      margin += m.values[k] * w[m.col_indices[k]];
    hinge += std::max(0.0, 1.0 - ds.labels[i] * margin);
  }
  return hinge / static_cast<double>(ds.n()) + penalty_total(penalty, w);
}

double augmented_lagrangian(const SolverState& st, const SolverConfig& cfg,
                            const HOperator& h) {
  const std::size_t n = h.rows(), d = h.cols();
  std::vector<double> hw = h.apply(st.w);
  const auto y = h.labels();
  double hinge = 0.0, cons = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    hinge += st.xi[i];
    const double r = hw[i] + st.b * y[i] + st.xi[i] - st.s[i] - 1.0 + st.v[i];
    cons += r * r;
    vv += st.v[i] * st.v[i];
  }
  double wz = 0.0, uu = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double r = st.w[j] - st.z[j] + st.u[j];
    wz += r * r;
    uu += st.u[j] * st.u[j];
  }
  return hinge / static_cast<double>(n) + penalty_total(cfg.penalty, st.z) +
         0.5 * cfg.rho1 * (wz - uu) + 0.5 * cfg.rho2 * (cons - vv);
}

FitReport fit(const Dataset& ds, const SolverConfig& cfg) {
  cfg.validate();
  ds.validate();
  const std::size_t n = ds.n(), d = ds.dim();
  const double rho = cfg.rho1 / cfg.rho2;

  FitReport report;
  const auto t_pre = Clock::now();
  HOperator h(ds);
  const auto y = h.labels();
  FactorCache cache = build_cache(h, cfg.rho1, cfg.rho2, cfg.force_branch, cfg.dense_dim_cap);
  SolverState st = initialize(n, d);
  report.precompute_seconds = seconds_since(t_pre);

  DiagnosticsSummary diag;
  double obj_prev = objective(st, cfg.penalty);
  SolverState prev = st;
  std::vector<double> hw(n);
  bool stopped = false;

  const auto t_it = Clock::now();
  for (std::size_t k = 0; k < cfg.max_iters; ++k) {
    prev = st;
    double lag_pre = 0.0;
    if (cfg.diagnostics) lag_pre = augmented_lagrangian(st, cfg, h);

    std::vector<double> f = assemble_f(st.z, st.u, st.s, st.xi, st.v, st.b, h, rho);
    solve_w(cache, h, f, st.w);
    h.apply(st.w, hw);

    if (cfg.diagnostics) {
      // gradient of L in w at the fresh w, all other blocks at their
      // pre-sweep values: rho1 (w - z + u) + rho2 H^T (Hw + b y + xi - s - 1 + v)
      std::vector<double> r(n);
      for (std::size_t i = 0; i < n; ++i)
        r[i] = hw[i] + st.b * y[i] + st.xi[i] - st.s[i] - 1.0 + st.v[i];
      std::vector<double> g = h.apply_transpose(r);
      for (std::size_t j = 0; j < d; ++j)
        g[j] = cfg.rho1 * (st.w[j] - st.z[j] + st.u[j]) + cfg.rho2 * g[j];
      diag.max_w_stationarity =
          std::max(diag.max_w_stationarity, norm_inf(g) / (1.0 + norm_inf(f)));
    }

    st.b = update_b(st, hw, y);

    if (cfg.diagnostics) {
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        r += y[i] * (hw[i] + st.b * y[i] + st.xi[i] - st.s[i] - 1.0 + st.v[i]);
      diag.max_b_orthogonality = std::max(diag.max_b_orthogonality, std::abs(r));
    }

    update_z(st, cfg);
    update_xi(st, hw, y, cfg.rho2);
    update_s(st, hw, y);

    if (cfg.diagnostics) {
      const double lag_post = augmented_lagrangian(st, cfg, h);
      diag.max_descent_violation = std::max(diag.max_descent_violation, lag_post - lag_pre);
      ++diag.iterations_checked;
    }

    update_duals(st, hw, y);
    st.iter = k + 1;

    const double obj = objective(st, cfg.penalty);
    const double rel = std::abs(obj - obj_prev) / std::max(std::abs(obj_prev), 1e-12);

    TraceRecord rec;
    rec.iter = st.iter;
    rec.objective = obj;
    rec.rel_change = rel;
    rec.res_wz = std::sqrt(norm2_diff(st.w, st.z));
    double cons = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = hw[i] + st.b * y[i] + st.xi[i] - st.s[i] - 1.0;
      cons += r * r;
    }
    rec.res_cons = std::sqrt(cons);
    double delta = norm2_diff(st.w, prev.w) + norm2_diff(st.z, prev.z) +
                   norm2_diff(st.u, prev.u) + norm2_diff(st.xi, prev.xi) +
                   norm2_diff(st.s, prev.s) + norm2_diff(st.v, prev.v) +
                   (st.b - prev.b) * (st.b - prev.b);
    rec.state_delta = std::sqrt(delta);
    rec.wall_time_s = seconds_since(t_it);
    report.trace.push_back(rec);

    if (!std::isfinite(obj) || !std::isfinite(rec.res_wz) || !std::isfinite(rec.res_cons) ||
        !std::isfinite(st.b))
      throw solver_error("non-finite iterate at iteration " + std::to_string(st.iter));

    obj_prev = obj;
    if (rel < cfg.epsilon) {
      stopped = true;
      break;
    }
  }
  report.iterate_seconds = seconds_since(t_it);

  report.w = st.w;
  report.b = st.b;
  report.iterations = st.iter;
  report.terminated_by = stopped ? StopReason::tolerance : StopReason::max_iters;
  report.true_objective = true_objective(report.w, report.b, ds, cfg.penalty);
  if (cfg.diagnostics) report.diagnostics = diag;
  return report;
}

}  // namespace npsvm
