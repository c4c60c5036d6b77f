// Times the OpenMP kernels against their serial reference implementations on
// synthetic sparse problems and prints a speedup table.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "npsvm/dense.hpp"
#include "npsvm/kernels.hpp"
#include "npsvm/prox.hpp"

using namespace npsvm;

namespace {

SparseMatrix random_csr(std::size_t n, std::size_t d, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SparseMatrix m;
  m.n_rows = n;
  m.n_cols = d;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      if (coin(rng) < density) {
        m.col_indices.push_back(j);
        m.values.push_back(val(rng));
      }
    m.row_offsets.push_back(m.values.size());
  }
  return m;
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, s);
  }
  return best;
}

void row(const char* name, double serial_s, double parallel_s) {
  std::printf("%-28s %12.6f %12.6f %8.2fx\n", name, serial_s, parallel_s,
              serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel timings"};
  std::size_t n = 4000, d = 2000;
  double density = 0.05;
  int reps = 3;
  int threads = 0;
  app.add_option("--rows", n, "matrix rows");
  app.add_option("--cols", d, "matrix cols");
  app.add_option("--density", density, "nonzero fraction");
  app.add_option("--reps", reps, "repetitions (best-of)");
  app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run their serial loops\n");
#endif
  std::printf("problem: %zu x %zu, density %.3f, best of %d\n\n", n, d, density, reps);
  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial_s", "parallel_s", "speedup");

  SparseMatrix x = random_csr(n, d, density, 7);
  SparseMatrix xt = kernels::transpose(x);
  std::vector<double> vx(d, 0.5), vn(n, 0.25), sign(n, 1.0);
  for (std::size_t i = 0; i < n; i += 3) sign[i] = -1.0;
  std::vector<double> out_n(n), out_d(d), out_d2(d);

  row("csr_times_vec",
      time_best_of(reps, [&] { kernels::serial::csr_times_vec(x, vx, out_n); }),
      time_best_of(reps, [&] { kernels::csr_times_vec(x, vx, out_n); }));

  row("csr_transpose_times_vec",
      time_best_of(reps, [&] { kernels::serial::csr_transpose_times_vec(x, vn, out_d); }),
      time_best_of(reps, [&] { kernels::csr_times_vec(xt, vn, out_d2); }));

  {
    DenseMatrix c1(d, d), c2(d, d);
    row("gram_xtx",
        time_best_of(reps, [&] { kernels::serial::gram_xtx(x, c1); }),
        time_best_of(reps, [&] { kernels::gram_xtx(x, xt, c2); }));
  }
  {
    // X X^T on a wide slice so the n x n result stays modest
    SparseMatrix wide = random_csr(std::min<std::size_t>(n, 1200), d, density, 11);
    DenseMatrix c1(wide.n_rows, wide.n_rows), c2(wide.n_rows, wide.n_rows);
    std::vector<double> s2(wide.n_rows, 1.0);
    row("gram_xxt",
        time_best_of(reps, [&] { kernels::serial::gram_xxt(wide, s2, c1); }),
        time_best_of(reps, [&] { kernels::gram_xxt(wide, s2, c2); }));
  }
  {
    const std::size_t m = std::min<std::size_t>(d, 1200);
    DenseMatrix spd(m, m);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> val(-0.5, 0.5);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double v = val(rng);
        spd(i, j) = v;
        spd(j, i) = v;
      }
    for (std::size_t i = 0; i < m; ++i) spd(i, i) += static_cast<double>(m);
    row("cholesky_inplace",
        time_best_of(reps, [&] { DenseMatrix a = spd; serial::cholesky_inplace(a); }),
        time_best_of(reps, [&] { DenseMatrix a = spd; cholesky_inplace(a); }));
  }
  {
    std::vector<double> target(200000), out(target.size());
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (auto& t : target) t = val(rng);
    PenaltyConfig pen{PenaltyKind::scad, 0.1, 3.7};
    const auto serial_s = time_best_of(reps, [&] {
      for (std::size_t i = 0; i < target.size(); ++i)
        out[i] = prox(ProxProblem{target[i], 1.0, pen});
    });
    const auto parallel_s =
        time_best_of(reps, [&] { prox_vector(target, 1.0, pen, out); });
    row("prox_vector", serial_s, parallel_s);
  }
  return 0;
}
