#include "npsvm/kernels.hpp"

#include <cstddef>

namespace npsvm::kernels {

void csr_times_vec(const SparseMatrix& m, std::span<const double> x, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(m.n_rows);
#pragma omp parallel for schedule(static) if (n > 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const std::size_t end = m.row_offsets[i + 1];
    for (std::size_t k = m.row_offsets[i]; k < end; ++k)
      acc += m.values[k] * x[m.col_indices[k]];
    out[i] = acc;
  }
}

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix t;
  t.n_rows = m.n_cols;
  t.n_cols = m.n_rows;
  t.row_offsets.assign(m.n_cols + 1, 0);
  t.col_indices.resize(m.nnz());
  t.values.resize(m.nnz());

  for (std::size_t k = 0; k < m.nnz(); ++k) ++t.row_offsets[m.col_indices[k] + 1];
  for (std::size_t j = 0; j < m.n_cols; ++j) t.row_offsets[j + 1] += t.row_offsets[j];

  std::vector<std::size_t> fill(t.row_offsets.begin(), t.row_offsets.end() - 1);
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
      const std::size_t pos = fill[m.col_indices[k]]++;
      t.col_indices[pos] = i;  // rows of m are visited in order, so sorted
      t.values[pos] = m.values[k];
    }
  }
  return t;
}

void gram_xtx(const SparseMatrix& x, const SparseMatrix& xt, DenseMatrix& c) {
  const auto d = static_cast<std::ptrdiff_t>(x.n_cols);
  c.fill(0.0);
  // Row j of C gathers contributions from every data row that touches
  // column j; the upper triangle is filled first, then mirrored.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t j = 0; j < d; ++j) {
    double* cj = c.row(j);
    for (std::size_t t = xt.row_offsets[j]; t < xt.row_offsets[j + 1]; ++t) {
      const std::size_t i = xt.col_indices[t];
      const double vij = xt.values[t];
      // skip to the first column >= j within row i
      std::size_t k = x.row_offsets[i];
      const std::size_t end = x.row_offsets[i + 1];
      while (k < end && x.col_indices[k] < static_cast<std::size_t>(j)) ++k;
      for (; k < end; ++k) cj[x.col_indices[k]] += vij * x.values[k];
    }
  }
  for (std::size_t j = 0; j < x.n_cols; ++j)
    for (std::size_t k = j + 1; k < x.n_cols; ++k) c(k, j) = c(j, k);
}

namespace {

inline double sparse_row_dot(const SparseMatrix& x, std::size_t a, std::size_t b) {
  std::size_t i = x.row_offsets[a], iend = x.row_offsets[a + 1];
  std::size_t j = x.row_offsets[b], jend = x.row_offsets[b + 1];
  double acc = 0.0;
  while (i < iend && j < jend) {
    const std::size_t ci = x.col_indices[i], cj = x.col_indices[j];
    if (ci == cj) {
      acc += x.values[i] * x.values[j];
      ++i;
      ++j;
    } else if (ci < cj) {
      ++i;
    } else {
      ++j;
    }
  }
  return acc;
}

}  // namespace

void gram_xxt(const SparseMatrix& x, std::span<const double> sign, DenseMatrix& c) {
  const auto n = static_cast<std::ptrdiff_t>(x.n_rows);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::size_t l = static_cast<std::size_t>(i); l < x.n_rows; ++l)
      c(i, l) = sign[i] * sign[l] * sparse_row_dot(x, i, l);
  }
  for (std::size_t i = 0; i < x.n_rows; ++i)
    for (std::size_t l = i + 1; l < x.n_rows; ++l) c(l, i) = c(i, l);
}

namespace serial {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void csr_times_vec(const SparseMatrix& m, std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
      acc += m.values[k] * x[m.col_indices[k]];
    out[i] = acc;
  }
}

void csr_transpose_times_vec(const SparseMatrix& m, std::span<const double> r,
                             std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    const double ri = r[i];
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
      out[m.col_indices[k]] += m.values[k] * ri;
  }
}

void gram_xtx(const SparseMatrix& x, DenseMatrix& c) {
  c.fill(0.0);
  for (std::size_t i = 0; i < x.n_rows; ++i) {
    for (std::size_t a = x.row_offsets[i]; a < x.row_offsets[i + 1]; ++a) {
      const std::size_t ja = x.col_indices[a];
      const double va = x.values[a];
      for (std::size_t b = a; b < x.row_offsets[i + 1]; ++b)
        c(ja, x.col_indices[b]) += va * x.values[b];
    }
  }
  for (std::size_t j = 0; j < x.n_cols; ++j)
    for (std::size_t k = j + 1; k < x.n_cols; ++k) c(k, j) = c(j, k);
}

void gram_xxt(const SparseMatrix& x, std::span<const double> sign, DenseMatrix& c) {
  for (std::size_t i = 0; i < x.n_rows; ++i)
    for (std::size_t l = i; l < x.n_rows; ++l) {
      const double v = sign[i] * sign[l] * sparse_row_dot(x, i, l);
      c(i, l) = v;
      c(l, i) = v;
    }
}

}  // namespace serial

}  // namespace npsvm::kernels
