// Command-line front end: train a sparse nonconvex-penalized linear SVM,
// predict with a saved model, or benchmark a (rho1, rho2) grid on one
// dataset with a stratified train/test split.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "npsvm/admm.hpp"
#include "npsvm/libsvm_io.hpp"
#include "npsvm/model.hpp"
#include "npsvm/report.hpp"
#include "npsvm/split.hpp"

namespace fs = std::filesystem;
using namespace npsvm;

namespace {

struct CommonOpts {
  std::string data;
  std::string test_data;
  std::string penalty = "scad";
  std::optional<double> lambda;
  std::optional<double> theta;
  double rho1 = 1.0, rho2 = 1.0, beta = 0.0, epsilon = 1e-4;
  std::size_t max_iters = 1000;
  std::uint64_t seed = 0;
  double split_fraction = 0.0;
  std::string out_dir = ".";
  std::string model_path;
  std::string grid;
  int threads = 0;
};

PenaltyConfig make_penalty(const CommonOpts& o) {
  PenaltyConfig pen;
  pen.kind = penalty_kind_from_string(o.penalty);
  pen.lambda = o.lambda.value_or(0.015625);  // 2^-6
  if (o.theta) {
    pen.theta = *o.theta;
  } else {
    switch (pen.kind) {
      case PenaltyKind::scad: pen.theta = 3.7; break;
      case PenaltyKind::mcp: pen.theta = 3.0; break;
      // no established default for these two; 1.0 is a neutral scale
      case PenaltyKind::lsp:
      case PenaltyKind::capped_l1: pen.theta = 1.0; break;
    }
  }
  pen.validate();
  return pen;
}

SolverConfig make_solver_config(const CommonOpts& o) {
  SolverConfig cfg;
  cfg.penalty = make_penalty(o);
  cfg.rho1 = o.rho1;
  cfg.rho2 = o.rho2;
  cfg.beta = o.beta;
  cfg.epsilon = o.epsilon;
  cfg.max_iters = o.max_iters;
  cfg.seed = o.seed;
  cfg.validate();
  return cfg;
}

std::vector<std::pair<double, double>> parse_grid(const std::string& text) {
  // "r1:r2,r1:r2,..."; empty means the default search grid
  if (text.empty()) {
    static const double pts[] = {0.01, 0.1, 1.0, 1.5, 5.0, 10.0};
    std::vector<std::pair<double, double>> grid;
    for (double a : pts)
      for (double b : pts) grid.emplace_back(a, b);
    return grid;
  }
  std::vector<std::pair<double, double>> grid;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    pos = (comma == std::string::npos) ? text.size() : comma + 1;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw config_error("grid item '" + item + "' is not of the form rho1:rho2");
    grid.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
  }
  if (grid.empty()) throw config_error("empty grid");
  return grid;
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int cmd_train(const CommonOpts& o) {
  set_threads(o.threads);
  SolverConfig cfg = make_solver_config(o);
  Dataset full = load_libsvm_file(o.data);

  Dataset train = std::move(full);
  std::optional<Dataset> test;
  if (o.split_fraction > 0.0) {
    auto [tr, te] = stratified_split(train, SplitSpec{o.split_fraction, o.seed});
    train = std::move(tr);
    test = std::move(te);
  } else if (!o.test_data.empty()) {
    test = load_libsvm_file(o.test_data, train.dim());
  }

  FitReport report = fit(train, cfg);

  LinearModel model{report.w, report.b, cfg.penalty, 1e-6};
  fs::create_directories(o.out_dir);
  const std::string model_path =
      o.model_path.empty() ? (fs::path(o.out_dir) / "model.json").string() : o.model_path;
  save_model(model, model_path);
  save_trace_csv(report, (fs::path(o.out_dir) / "trace.csv").string());
  save_report_json(report, (fs::path(o.out_dir) / "report.json").string());

  const SparsityReport sp = model.coefficient_sparsity();
  std::printf("trained %s on %s: %zu iterations (%s), objective %.6g\n",
              std::string(to_string(cfg.penalty.kind)).c_str(), o.data.c_str(),
              report.iterations, std::string(to_string(report.terminated_by)).c_str(),
              report.true_objective);
  std::printf("precompute %.6f s, iterate %.6f s; zero coefficients %zu/%zu\n",
              report.precompute_seconds, report.iterate_seconds, sp.zero_count, sp.total);
  std::printf("train accuracy %.4f\n", model.accuracy(train));
  if (test) std::printf("test accuracy %.4f\n", model.accuracy(*test));
  std::printf("model: %s\n", model_path.c_str());
  return 0;
}

int cmd_predict(const CommonOpts& o) {
  set_threads(o.threads);
  LinearModel model = load_model(o.model_path);

  std::ifstream in(o.data, std::ios::binary);
  if (!in) throw error("cannot open " + o.data);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  RawParse raw = parse_libsvm_raw(text, model.dim());

  fs::create_directories(o.out_dir);
  const std::string pred_path = (fs::path(o.out_dir) / "predictions.txt").string();
  std::ofstream out(pred_path, std::ios::binary);
  if (!out) throw error("cannot write " + pred_path);

  std::vector<double> preds(raw.features.n_rows);
  for (std::size_t i = 0; i < raw.features.n_rows; ++i) {
    preds[i] = model.predict(raw.features, i);
    out << (preds[i] > 0 ? "+1" : "-1") << '\n';
  }

  // accuracy only when the file carries two label values (otherwise the
  // label column is treated as a placeholder)
  std::set<double> distinct(raw.raw_labels.begin(), raw.raw_labels.end());
  if (distinct.size() == 2) {
    const double low = *distinct.begin();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const double truth = (raw.raw_labels[i] == low) ? -1.0 : 1.0;
      if (preds[i] == truth) ++hits;
    }
    std::printf("accuracy %.6f\n", static_cast<double>(hits) / static_cast<double>(preds.size()));
  }
  std::printf("predictions: %s\n", pred_path.c_str());
  return 0;
}

int cmd_bench(const CommonOpts& o) {
  set_threads(o.threads);
  const auto grid = parse_grid(o.grid);
  PenaltyConfig pen = make_penalty(o);
  Dataset full = load_libsvm_file(o.data);
  const double frac = o.split_fraction > 0.0 ? o.split_fraction : 0.1;
  auto [train, test] = stratified_split(full, SplitSpec{frac, o.seed});

  fs::create_directories(o.out_dir);
  const std::string csv_path = (fs::path(o.out_dir) / "bench.csv").string();
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw error("cannot write " + csv_path);
  csv << "penalty,rho1,rho2,iterations,terminated_by,precompute_s,iterate_s,total_s,"
         "test_accuracy\n";

  std::printf("%-10s %8s %8s %6s %12s %12s %12s %10s\n", "penalty", "rho1", "rho2", "iters",
              "precomp_s", "iterate_s", "total_s", "accuracy");
  double best_acc = -1.0;
  std::pair<double, double> best_pair{0, 0};
  std::size_t best_iters = 0;
  char line[256];
  for (const auto& [r1, r2] : grid) {
    SolverConfig cfg;
    cfg.penalty = pen;
    cfg.rho1 = r1;
    cfg.rho2 = r2;
    cfg.beta = o.beta;
    cfg.epsilon = o.epsilon;
    cfg.max_iters = o.max_iters;
    cfg.seed = o.seed;
    FitReport rep = fit(train, cfg);
    LinearModel model{rep.w, rep.b, pen, 1e-6};
    const double acc = model.accuracy(test);
    const double total = rep.precompute_seconds + rep.iterate_seconds;
    std::snprintf(line, sizeof(line), "%s,%g,%g,%zu,%s,%.9f,%.9f,%.9f,%.17g\n",
                  std::string(to_string(pen.kind)).c_str(), r1, r2, rep.iterations,
                  std::string(to_string(rep.terminated_by)).c_str(), rep.precompute_seconds,
                  rep.iterate_seconds, total, acc);
    csv << line;
    std::printf("%-10s %8g %8g %6zu %12.6f %12.6f %12.6f %9.2f%%\n",
                std::string(to_string(pen.kind)).c_str(), r1, r2, rep.iterations,
                rep.precompute_seconds, rep.iterate_seconds, total, 100.0 * acc);
    if (acc > best_acc || (acc == best_acc && rep.iterations < best_iters)) {
      best_acc = acc;
      best_pair = {r1, r2};
      best_iters = rep.iterations;
    }
  }
  std::printf("best: rho1=%g rho2=%g accuracy %.2f%% (%zu iterations)\n", best_pair.first,
              best_pair.second, 100.0 * best_acc, best_iters);
  std::printf("results: %s\n", csv_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse nonconvex-penalized linear SVM solver"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_penalty_opts = [&](CLI::App* cmd) {
    cmd->add_option("--penalty", o.penalty, "lsp, scad, mcp or capped_l1");
    cmd->add_option("--lambda", o.lambda, "penalty weight (default 2^-6)");
    cmd->add_option("--theta", o.theta, "penalty shape (defaults: scad 3.7, mcp 3, else 1)");
  };
  auto add_solver_opts = [&](CLI::App* cmd) {
    cmd->add_option("--rho1", o.rho1, "w=z coupling weight");
    cmd->add_option("--rho2", o.rho2, "constraint coupling weight");
    cmd->add_option("--beta", o.beta, "proximal damping of the z-step");
    cmd->add_option("--epsilon", o.epsilon, "relative objective-change tolerance");
    cmd->add_option("--max-iters", o.max_iters, "iteration cap");
    cmd->add_option("--seed", o.seed, "split seed");
    cmd->add_option("--threads", o.threads, "OpenMP thread count (0 = runtime default)");
    cmd->add_option("--out-dir", o.out_dir, "output directory");
  };

  CLI::App* train = app.add_subcommand("train", "fit a model and write model/trace/report");
  train->add_option("--data", o.data, "training data (LIBSVM text)")->required();
  train->add_option("--test-data", o.test_data, "held-out data for the accuracy report");
  train->add_option("--split-fraction", o.split_fraction,
                    "carve a stratified test split off --data instead");
  train->add_option("--model", o.model_path, "model output path (default out-dir/model.json)");
  add_penalty_opts(train);
  add_solver_opts(train);

  CLI::App* predict = app.add_subcommand("predict", "write ±1 predictions for a data file");
  predict->add_option("--model", o.model_path, "model JSON")->required();
  predict->add_option("--data", o.data, "data file (labels optional)")->required();
  predict->add_option("--out-dir", o.out_dir, "output directory");
  predict->add_option("--threads", o.threads, "OpenMP thread count");

  CLI::App* bench = app.add_subcommand(
      "bench", "grid-search rho1/rho2 on a stratified split and tabulate the results");
  bench->add_option("--data", o.data, "dataset (LIBSVM text)")->required();
  bench->add_option("--grid", o.grid,
                    "comma list rho1:rho2 (default: all pairs over "
                    "{0.01,0.1,1,1.5,5,10})");
  bench->add_option("--split-fraction", o.split_fraction, "test fraction (default 0.1)");
  add_penalty_opts(bench);
  add_solver_opts(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(train)) return cmd_train(o);
    if (app.got_subcommand(predict)) return cmd_predict(o);
    if (app.got_subcommand(bench)) return cmd_bench(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
