#include "npsvm/dataset.hpp"

#include <cmath>

namespace npsvm {

void SparseMatrix::validate() const {
  if (row_offsets.size() != n_rows + 1) throw error("row_offsets length mismatch");
  if (row_offsets.front() != 0) throw error("row_offsets must start at 0");
  if (row_offsets.back() != values.size() || values.size() != col_indices.size())
    throw error("row_offsets/values/col_indices sizes disagree");
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (row_offsets[i] > row_offsets[i + 1]) throw error("row_offsets not nondecreasing");
    for (std::size_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
      if (col_indices[k] >= n_cols) throw error("column index out of range");
      if (k > row_offsets[i] && col_indices[k] <= col_indices[k - 1])
        throw error("column indices not strictly increasing within a row");
      if (!std::isfinite(values[k])) throw error("non-finite matrix value");
    }
  }
}

void Dataset::validate() const {
  features.validate();
  if (labels.size() != features.n_rows) throw error("label count != row count");
  bool pos = false, neg = false;
  for (double y : labels) {
    if (y == 1.0)
      pos = true;
    else if (y == -1.0)
      neg = true;
    else
      throw error("labels must be exactly -1 or +1");
  }
  if (!pos || !neg) throw error("dataset must contain both classes");
}

}  // namespace npsvm
