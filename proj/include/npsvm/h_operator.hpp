#ifndef NPSVM_H_OPERATOR_HPP
#define NPSVM_H_OPERATOR_HPP

#include <span>
#include <vector>

#include "npsvm/dataset.hpp"
#include "npsvm/kernels.hpp"

namespace npsvm {

// Matrix-free products with H = diag(y) * X. Because y_i is ±1, H^T H equals
// X^T X and H H^T = diag(y) X X^T diag(y). The transpose of X is materialized
// once at construction so both products are row-parallel and deterministic.
class HOperator {
 public:
  explicit HOperator(const Dataset& ds)
      : ds_(&ds), xt_(kernels::transpose(ds.features)) {}

  std::size_t rows() const { return ds_->n(); }  // n
  std::size_t cols() const { return ds_->dim(); }  // d

  const Dataset& dataset() const { return *ds_; }
  std::span<const double> labels() const { return ds_->labels; }
  const SparseMatrix& x_transpose() const { return xt_; }

  // out = H x = y .* (X x)
  void apply(std::span<const double> x, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> x) const;

  // out = H^T r = X^T (y .* r)
  void apply_transpose(std::span<const double> r, std::span<double> out) const;
  std::vector<double> apply_transpose(std::span<const double> r) const;

 private:
  const Dataset* ds_;
  SparseMatrix xt_;
};

}  // namespace npsvm

#endif
