#ifndef NPSVM_DATASET_HPP
#define NPSVM_DATASET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "npsvm/errors.hpp"

namespace npsvm {

// Compressed-sparse-row matrix. Column indices are 0-based and strictly
// increasing within a row; explicit zero values are tolerated.
struct SparseMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::size_t> row_offsets{0};  // length n_rows + 1
  std::vector<std::size_t> col_indices;
  std::vector<double> values;

  std::size_t nnz() const { return values.size(); }

  std::span<const std::size_t> row_cols(std::size_t i) const {
    return {col_indices.data() + row_offsets[i], row_offsets[i + 1] - row_offsets[i]};
  }
  std::span<const double> row_vals(std::size_t i) const {
    return {values.data() + row_offsets[i], row_offsets[i + 1] - row_offsets[i]};
  }

  // Throws error if the CSR invariants do not hold.
  void validate() const;
};

// Feature matrix plus ±1 labels, one per row.
struct Dataset {
  SparseMatrix features;
  std::vector<double> labels;

  std::size_t n() const { return features.n_rows; }
  std::size_t dim() const { return features.n_cols; }

  // Checks CSR invariants, label/row agreement, labels in {-1,+1} and
  // that both classes are present.
  void validate() const;
};

}  // namespace npsvm

#endif
