#include "npsvm/split.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace npsvm {

namespace {

// splitmix64; self-contained so the partition never depends on the standard
// library's generator internals
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

void fisher_yates(std::vector<std::size_t>& idx, Rng& rng) {
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[rng.next() % i]);
}

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& rows) {
  Dataset out;
  out.features.n_cols = ds.dim();
  out.features.n_rows = rows.size();
  out.features.row_offsets.assign(1, 0);
  out.labels.reserve(rows.size());
  for (std::size_t r : rows) {
    const SparseMatrix& m = ds.features;
    for (std::size_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
      out.features.col_indices.push_back(m.col_indices[k]);
      out.features.values.push_back(m.values[k]);
    }
    out.features.row_offsets.push_back(out.features.values.size());
    out.labels.push_back(ds.labels[r]);
  }
  return out;
}

}  // namespace

std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, const SplitSpec& spec) {
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
    throw config_error("test_fraction must be in (0,1)");
  ds.validate();

  std::vector<std::size_t> test_rows, train_rows;
  for (double cls : {-1.0, 1.0}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ds.n(); ++i)
      if (ds.labels[i] == cls) idx.push_back(i);
    // round half up per class
    const auto want =
        static_cast<std::size_t>(std::floor(spec.test_fraction * static_cast<double>(idx.size()) + 0.5));
    if (want == 0)
      throw config_error("class too small: test split would miss a class");
    if (want >= idx.size())
      throw config_error("class too small: train split would miss a class");
    Rng rng(spec.seed * 0x9E3779B97F4A7C15ULL + (cls > 0 ? 0x1234567ULL : 0x89ABCDEFULL));
    fisher_yates(idx, rng);
    test_rows.insert(test_rows.end(), idx.begin(), idx.begin() + want);
    train_rows.insert(train_rows.end(), idx.begin() + want, idx.end());
  }
  // keep the original row order inside each part
  std::sort(test_rows.begin(), test_rows.end());
  std::sort(train_rows.begin(), train_rows.end());
  return {take_rows(ds, train_rows), take_rows(ds, test_rows)};
}

}  // namespace npsvm
