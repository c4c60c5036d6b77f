#ifndef NPSVM_MODEL_HPP
#define NPSVM_MODEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "npsvm/dataset.hpp"
#include "npsvm/penalty.hpp"

namespace npsvm {

struct SparsityReport {
  std::size_t zero_count = 0;
  std::size_t total = 0;
  double fraction = 0.0;
};

// A trained linear classifier: sign(w^T x + b), with a zero margin mapped
// to +1.
struct LinearModel {
  std::vector<double> w;
  double b = 0.0;
  PenaltyConfig penalty_used;
  double zero_tolerance = 1e-6;

  std::size_t dim() const { return w.size(); }

  // Prediction for one sparse row (indices 0-based, must be < dim()).
  double predict(std::span<const std::size_t> cols, std::span<const double> vals) const;
  double predict(const SparseMatrix& m, std::size_t row) const;

  // Fraction of samples whose prediction matches the label.
  double accuracy(const Dataset& ds) const;

  // Counts coefficients with |w_j| < zero_tolerance.
  SparsityReport coefficient_sparsity() const;
};

// JSON serialization: {"dim", "bias", "weights" (array of [index, value] for
// the exactly-nonzero coefficients), "penalty": {"kind", "lambda", "theta"}}.
std::string to_json(const LinearModel& m);
LinearModel model_from_json(const std::string& text);
void save_model(const LinearModel& m, const std::string& path);
LinearModel load_model(const std::string& path);

}  // namespace npsvm

#endif
