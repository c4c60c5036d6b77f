#include "npsvm/h_operator.hpp"

namespace npsvm {

void HOperator::apply(std::span<const double> x, std::span<double> out) const {
  kernels::csr_times_vec(ds_->features, x, out);
  const auto& y = ds_->labels;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= y[i];
}

std::vector<double> HOperator::apply(std::span<const double> x) const {
  std::vector<double> out(rows());
  apply(x, out);
  return out;
}

void HOperator::apply_transpose(std::span<const double> r, std::span<double> out) const {
  std::vector<double> signed_r(rows());
  const auto& y = ds_->labels;
  for (std::size_t i = 0; i < signed_r.size(); ++i) signed_r[i] = y[i] * r[i];
  kernels::csr_times_vec(xt_, signed_r, out);
}

std::vector<double> HOperator::apply_transpose(std::span<const double> r) const {
  std::vector<double> out(cols());
  apply_transpose(r, out);
  return out;
}

}  // namespace npsvm
