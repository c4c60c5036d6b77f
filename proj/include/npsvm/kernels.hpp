#ifndef NPSVM_KERNELS_HPP
#define NPSVM_KERNELS_HPP

#include <cstddef>
#include <span>

#include "npsvm/dataset.hpp"
#include "npsvm/dense.hpp"

// Hot loops of the solver. The functions in npsvm::kernels are the production
// versions (OpenMP-parallel where it pays off); npsvm::kernels::serial keeps
// plain reference implementations with independent loop structures, used by
// the tests and the kernel benchmark. All parallel kernels write disjoint
// output ranges, so their results are bit-identical to the serial ones for
// any thread count.

namespace npsvm::kernels {

// out = m * x  (parallel over rows)
void csr_times_vec(const SparseMatrix& m, std::span<const double> x, std::span<double> out);

// Builds the CSR representation of m^T (counting sort over columns, serial).
SparseMatrix transpose(const SparseMatrix& m);

// c = x^T x given xt = transpose(x); c must be dim x dim. Parallel over
// output rows; row j is accumulated from the rows of x listed in xt.row(j).
void gram_xtx(const SparseMatrix& x, const SparseMatrix& xt, DenseMatrix& c);

// c = S x x^T S for S = diag(sign), i.e. c(i,l) = sign_i sign_l <row_i, row_l>.
// Parallel over output rows, two-pointer sparse dot per pair.
void gram_xxt(const SparseMatrix& x, std::span<const double> sign, DenseMatrix& c);

namespace serial {

double dot(std::span<const double> a, std::span<const double> b);

void csr_times_vec(const SparseMatrix& m, std::span<const double> x, std::span<double> out);

// out = m^T r via scatter over the rows of m (no transpose needed) --
// deliberately a different algorithm from transpose() + csr_times_vec.
void csr_transpose_times_vec(const SparseMatrix& m, std::span<const double> r,
                             std::span<double> out);

// c = x^T x accumulated row by row as a sum of sparse outer products.
void gram_xtx(const SparseMatrix& x, DenseMatrix& c);

void gram_xxt(const SparseMatrix& x, std::span<const double> sign, DenseMatrix& c);

}  // namespace serial

}  // namespace npsvm::kernels

#endif
