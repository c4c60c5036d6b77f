#ifndef NPSVM_SPLIT_HPP
#define NPSVM_SPLIT_HPP

#include <cstdint>
#include <utility>

#include "npsvm/dataset.hpp"

namespace npsvm {

struct SplitSpec {
  double test_fraction = 0.1;  // in (0,1)
  std::uint64_t seed = 0;
};

// Deterministic stratified train/test split. Per class, round(fraction *
// class_count) samples (half rounds up) go to the test set, chosen by a
// seeded Fisher-Yates shuffle of that class's row indices; the shuffle is
// hand-rolled so the partition depends only on (ds, seed), not on the
// standard library. Throws config_error when a class is too small to leave
// at least one sample on each side of the split.
std::pair<Dataset, Dataset> stratified_split(const Dataset& ds, const SplitSpec& spec);

}  // namespace npsvm

#endif
