#ifndef NPSVM_DENSE_HPP
#define NPSVM_DENSE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace npsvm {

// Row-major dense square-or-rectangular matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  double* row(std::size_t r) { return a_.data() + r * cols_; }
  const double* row(std::size_t r) const { return a_.data() + r * cols_; }

  std::span<double> data() { return a_; }
  std::span<const double> data() const { return a_; }

  void fill(double v) { std::fill(a_.begin(), a_.end(), v); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// In-place Cholesky A = L L^T of a symmetric positive definite matrix; on
// return the lower triangle holds L (the strict upper triangle is zeroed).
// Returns false when a non-positive pivot is met. The trailing-column update
// is OpenMP-parallel; results are identical for any thread count.
bool cholesky_inplace(DenseMatrix& a);

// Solves L L^T x = b in place given the lower factor (forward then backward
// substitution).
void cholesky_solve(const DenseMatrix& chol_lower, std::span<double> b);

namespace serial {
// Reference single-threaded factorization used to validate the parallel one.
bool cholesky_inplace(DenseMatrix& a);
}  // namespace serial

}  // namespace npsvm

#endif
