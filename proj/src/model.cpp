#include "npsvm/model.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace npsvm {

double LinearModel::predict(std::span<const std::size_t> cols,
                            std::span<const double> vals) const {
  double margin = b;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= w.size()) throw error("feature index exceeds model dimension");
    margin += vals[k] * w[cols[k]];
  }
  return margin >= 0.0 ? 1.0 : -1.0;  // zero margin maps to +1
}

double LinearModel::predict(const SparseMatrix& m, std::size_t row) const {
  return predict(m.row_cols(row), m.row_vals(row));
}

double LinearModel::accuracy(const Dataset& ds) const {
  if (ds.dim() > dim()) throw error("dataset dimension exceeds model dimension");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ds.n(); ++i)
    if (predict(ds.features, i) == ds.labels[i]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(ds.n());
}

SparsityReport LinearModel::coefficient_sparsity() const {
  SparsityReport r;
  r.total = w.size();
  for (double wj : w)
    if (std::abs(wj) < zero_tolerance) ++r.zero_count;
  r.fraction = r.total ? static_cast<double>(r.zero_count) / static_cast<double>(r.total) : 0.0;
  return r;
}

std::string to_json(const LinearModel& m) {
  nlohmann::json j;
  j["dim"] = m.w.size();
  j["bias"] = m.b;
  auto weights = nlohmann::json::array();
  for (std::size_t k = 0; k < m.w.size(); ++k)
    if (m.w[k] != 0.0) weights.push_back({k, m.w[k]});
  j["weights"] = std::move(weights);
  j["penalty"] = {{"kind", std::string(to_string(m.penalty_used.kind))},
                  {"lambda", m.penalty_used.lambda},
                  {"theta", m.penalty_used.theta}};
  return j.dump(2);
}

LinearModel model_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LinearModel m;
  m.w.assign(j.at("dim").get<std::size_t>(), 0.0);
  m.b = j.at("bias").get<double>();
  for (const auto& e : j.at("weights")) {
    const auto idx = e.at(0).get<std::size_t>();
    if (idx >= m.w.size()) throw error("model weight index out of range");
    m.w[idx] = e.at(1).get<double>();
  }
  const auto& p = j.at("penalty");
  m.penalty_used.kind = penalty_kind_from_string(p.at("kind").get<std::string>());
  m.penalty_used.lambda = p.at("lambda").get<double>();
  m.penalty_used.theta = p.at("theta").get<double>();
  return m;
}

void save_model(const LinearModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << to_json(m) << '\n';
}

LinearModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_json(text);
}

}  // namespace npsvm
