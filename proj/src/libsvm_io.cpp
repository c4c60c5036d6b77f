#include "npsvm/libsvm_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace npsvm {

namespace {

inline const char* skip_ws(const char* p, const char* end) {
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  return p;
}

double parse_double(const char*& p, const char* end, std::size_t line_no, const char* what) {
  double v = 0.0;
  auto [next, ec] = std::from_chars(p, end, v);
  if (ec != std::errc{}) throw parse_error(line_no, std::string("expected ") + what);
  p = next;
  return v;
}

}  // namespace

RawParse parse_libsvm_raw(std::string_view text, std::optional<std::size_t> n_cols_override) {
  RawParse out;
  SparseMatrix& m = out.features;
  std::size_t max_col = 0;  // 1-based maximum index seen

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos) ? text.substr(pos)
                                                            : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    const char* p = line.data();
    const char* end = p + line.size();
    p = skip_ws(p, end);
    if (p == end) continue;

    // label: a leading '+' is accepted even though from_chars does not eat it
    if (*p == '+') ++p;
    double label = parse_double(p, end, line_no, "label");
    out.raw_labels.push_back(label);
    out.line_numbers.push_back(line_no);

    std::size_t prev_idx = 0;
    while (true) {
      p = skip_ws(p, end);
      if (p == end) break;
      long long idx = 0;
      auto [next, ec] = std::from_chars(p, end, idx);
      if (ec != std::errc{}) throw parse_error(line_no, "expected feature index");
      p = next;
      if (idx < 1) throw parse_error(line_no, "feature index must be >= 1");
      if (static_cast<std::size_t>(idx) <= prev_idx)
        throw parse_error(line_no, "feature indices must be strictly increasing");
      prev_idx = static_cast<std::size_t>(idx);
      if (p == end || *p != ':') throw parse_error(line_no, "expected ':' after index");
      ++p;
      double value = parse_double(p, end, line_no, "feature value");
      m.col_indices.push_back(static_cast<std::size_t>(idx) - 1);
      m.values.push_back(value);
      max_col = std::max(max_col, static_cast<std::size_t>(idx));
    }
    m.row_offsets.push_back(m.values.size());
  }

  m.n_rows = m.row_offsets.size() - 1;
  m.n_cols = n_cols_override.value_or(max_col);
  if (m.n_cols < max_col)
    throw error("column override " + std::to_string(m.n_cols) +
                " smaller than maximum feature index " + std::to_string(max_col));
  return out;
}

Dataset parse_libsvm(std::string_view text, std::optional<std::size_t> n_cols_override) {
  RawParse raw = parse_libsvm_raw(text, n_cols_override);
  std::set<double> distinct;
  for (std::size_t i = 0; i < raw.raw_labels.size(); ++i) {
    distinct.insert(raw.raw_labels[i]);
    if (distinct.size() > 2)
      throw parse_error(raw.line_numbers[i], "more than two distinct labels");
  }
  if (distinct.empty()) throw error("empty dataset");

  Dataset ds;
  ds.features = std::move(raw.features);
  ds.labels.resize(raw.raw_labels.size());
  // normalize labels to {-1,+1}: keep ±1 files untouched, otherwise the
  // smaller raw value maps to -1
  const bool already_pm1 =
      (distinct.size() == 2 && *distinct.begin() == -1.0 && *distinct.rbegin() == 1.0);
  if (already_pm1) {
    ds.labels = raw.raw_labels;
  } else {
    if (distinct.size() < 2) throw error("dataset must contain both classes");
    const double low = *distinct.begin();
    for (std::size_t i = 0; i < ds.labels.size(); ++i)
      ds.labels[i] = (raw.raw_labels[i] == low) ? -1.0 : 1.0;
  }
  ds.validate();
  return ds;
}

Dataset parse_libsvm(std::istream& in, std::optional<std::size_t> n_cols_override) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_libsvm(std::string_view(buf.str()), n_cols_override);
}

Dataset load_libsvm_file(const std::string& path, std::optional<std::size_t> n_cols_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  return parse_libsvm(in, n_cols_override);
}

std::string write_libsvm(const Dataset& ds) {
  std::string out;
  char buf[64];
  const SparseMatrix& m = ds.features;
  for (std::size_t i = 0; i < m.n_rows; ++i) {
    std::snprintf(buf, sizeof(buf), "%g", ds.labels[i]);
    out += buf;
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
      std::snprintf(buf, sizeof(buf), " %zu:%.17g", m.col_indices[k] + 1, m.values[k]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

double sparsity_percent(const Dataset& ds) {
  const double cells = static_cast<double>(ds.n()) * static_cast<double>(ds.dim());
  if (cells == 0.0) return 0.0;
  return 100.0 * static_cast<double>(ds.features.nnz()) / cells;
}

}  // namespace npsvm
