// Serial vs OpenMP timings for the point-count kernel and the census.

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include <CLI11.hpp>

#include "treecount/counting.hpp"
#include "treecount/enumerate.hpp"
#include "treecount/oracle.hpp"
#include "treecount/parallel.hpp"

using namespace treecount;

namespace {

template <typename F>
double best_of(int repeat, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* name, double seconds, double baseline) {
  std::printf("%-28s %10.4f s  x%.2f\n", name, seconds, baseline / seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treecount benchmarks"};
  int n = 8, census_n = 13, repeat = 3;
  std::uint32_t q = 5;
  app.add_option("--n", n, "vertices of the point-count tree (a path)")->check(CLI::Range(1, 12));
  app.add_option("--q", q, "field size for the point count");
  app.add_option("--census-n", census_n, "census size")->check(CLI::Range(1, kMaxCensusSize));
  app.add_option("--repeat", repeat, "runs per measurement, best is kept")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    std::printf("workers: %d\n", worker_count());
    const Tree t = path_tree(n);
    const FqContext ctx(q);
    const std::vector<FqElement> alpha(n, 1);
    BigInt serial_value, parallel_value;
    const double serial = best_of(repeat, [&] { serial_value = count_fixed_serial(t, ctx, alpha); });
    const double parallel = best_of(repeat, [&] { parallel_value = count_fixed(t, ctx, alpha); });
    const double transfer =
        best_of(repeat, [&] { (void)count_fixed_transfer(t, ctx, ParameterDomain::fixed_values(alpha)); });
    if (serial_value != parallel_value) throw std::runtime_error("serial and parallel point counts differ");
    std::printf("point count A_%d over F_%u = %s\n", n, q, serial_value.str().c_str());
    row("count_fixed_serial", serial, serial);
    row("count_fixed (OpenMP)", parallel, serial);
    row("count_fixed_transfer", transfer, serial);

    std::printf("census n=%d unimodal-generic\n", census_n);
    std::size_t distinct[3] = {};
    const CensusParallelism modes[] = {CensusParallelism::Serial, CensusParallelism::PerWorkerMemo,
                                       CensusParallelism::SharedMemo};
    const char* names[] = {"census serial", "census per-worker memo", "census shared memo"};
    double base = 0;
    for (int i = 0; i < 3; ++i) {
      const double s = best_of(repeat, [&] { distinct[i] = census(census_n, CensusClass::UnimodalGeneric, modes[i]).distinct_polynomials; });
      if (i == 0) base = s;
      row(names[i], s, base);
    }
    if (distinct[0] != distinct[1] || distinct[0] != distinct[2])
      throw std::runtime_error("census modes disagree");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
