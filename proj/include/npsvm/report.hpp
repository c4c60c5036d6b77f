#ifndef NPSVM_REPORT_HPP
#define NPSVM_REPORT_HPP

#include <string>

#include "npsvm/admm.hpp"

namespace npsvm {

// CSV with header iter,objective,rel_change,res_wz,res_cons,state_delta,
// wall_time_s; every non-timing column is a deterministic function of the
// inputs, the wall-time column is the only one that varies across reruns.
std::string trace_to_csv(const FitReport& report);
void save_trace_csv(const FitReport& report, const std::string& path);

// JSON mirroring FitReport's fields ("model" holds weights and bias).
std::string report_to_json(const FitReport& report);
void save_report_json(const FitReport& report, const std::string& path);

}  // namespace npsvm

#endif
