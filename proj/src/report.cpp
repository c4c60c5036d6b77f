#include "npsvm/report.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace npsvm {

std::string trace_to_csv(const FitReport& report) {
  std::string out = "iter,objective,rel_change,res_wz,res_cons,state_delta,wall_time_s\n";
  char buf[256];
  for (const TraceRecord& r : report.trace) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g,%.17g,%.9f\n", r.iter,
                  r.objective, r.rel_change, r.res_wz, r.res_cons, r.state_delta,
                  r.wall_time_s);
    out += buf;
  }
  return out;
}

void save_trace_csv(const FitReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << trace_to_csv(report);
}

std::string report_to_json(const FitReport& report) {
  nlohmann::json j;
  auto weights = nlohmann::json::array();
  for (std::size_t k = 0; k < report.w.size(); ++k)
    if (report.w[k] != 0.0) weights.push_back({k, report.w[k]});
  j["model"] = {{"dim", report.w.size()}, {"bias", report.b}, {"weights", std::move(weights)}};
  j["iterations"] = report.iterations;
  j["terminated_by"] = std::string(to_string(report.terminated_by));
  j["precompute_seconds"] = report.precompute_seconds;
  j["iterate_seconds"] = report.iterate_seconds;
  j["true_objective"] = report.true_objective;
  auto trace = nlohmann::json::array();
  for (const TraceRecord& r : report.trace)
    trace.push_back({{"iter", r.iter},
                     {"objective", r.objective},
                     {"rel_change", r.rel_change},
                     {"res_wz", r.res_wz},
                     {"res_cons", r.res_cons},
                     {"state_delta", r.state_delta},
                     {"wall_time_s", r.wall_time_s}});
  j["trace"] = std::move(trace);
  if (report.diagnostics) {
    j["diagnostics"] = {{"max_w_stationarity", report.diagnostics->max_w_stationarity},
                        {"max_b_orthogonality", report.diagnostics->max_b_orthogonality},
                        {"max_descent_violation", report.diagnostics->max_descent_violation},
                        {"iterations_checked", report.diagnostics->iterations_checked}};
  }
  return j.dump(2);
}

void save_report_json(const FitReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << report_to_json(report) << '\n';
}

}  // namespace npsvm
