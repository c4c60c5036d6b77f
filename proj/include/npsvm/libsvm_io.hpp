#ifndef NPSVM_LIBSVM_IO_HPP
#define NPSVM_LIBSVM_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "npsvm/dataset.hpp"

namespace npsvm {

// Parses LIBSVM text: one sample per line, `label idx:val idx:val ...` with
// 1-based strictly increasing indices. `#` starts a comment, lines may end in
// LF or CRLF, blank lines are skipped. Raw labels are normalized to {-1,+1}:
// files already using ±1 are kept as-is, otherwise the smaller of the two
// distinct raw values maps to -1. The column count is the maximum index seen
// unless n_cols_override is given (so a test file can share the training
// dimension). Throws parse_error with a 1-based line number on malformed
// input, and error when label normalization is impossible.
Dataset parse_libsvm(std::string_view text,
                     std::optional<std::size_t> n_cols_override = std::nullopt);
Dataset parse_libsvm(std::istream& in,
                     std::optional<std::size_t> n_cols_override = std::nullopt);
Dataset load_libsvm_file(const std::string& path,
                         std::optional<std::size_t> n_cols_override = std::nullopt);

// Features plus the raw (un-normalized) label column, for callers that must
// accept unlabeled or single-class files (prediction input).
struct RawParse {
  SparseMatrix features;
  std::vector<double> raw_labels;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each sample
};
RawParse parse_libsvm_raw(std::string_view text,
                          std::optional<std::size_t> n_cols_override = std::nullopt);

// Writes a Dataset back to LIBSVM text (1-based indices, full value
// precision); parse_libsvm(write_libsvm(ds)) reproduces ds exactly.
std::string write_libsvm(const Dataset& ds);

// Fraction of stored nonzeros, as a percentage of n*d.
double sparsity_percent(const Dataset& ds);

}  // namespace npsvm

#endif
