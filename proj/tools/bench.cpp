// Benchmark: OpenMP kernels against their single-threaded references.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "acw/neighborhoods.hpp"
#include "acw/search.hpp"
#include "acw/series.hpp"
#include "acw/topology.hpp"

using namespace acw;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  printf("threads: %d\n\n", threads);
  printf("%-34s %10s %10s %7s\n", "kernel", "serial(s)", "parallel(s)", "speedup");

  {
    int lmax = 10;
    auto t0 = Clock::now();
    auto gs = enumerate_identity_component_serial(lmax, MoveSet::kPrime);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto gp = enumerate_identity_component(lmax, MoveSet::kPrime, threads);
    double tp = seconds_since(t0);
    printf("%-34s %10.3f %10.3f %6.2fx  (v=%zu e=%llu)\n",
           "identity-component lmax=10", ts, tp, ts / tp, gp.vertices.size(),
           (unsigned long long)gp.edge_count());
    if (gs.vertices.size() != gp.vertices.size() ||
        gs.edge_count() != gp.edge_count()) {
      printf("MISMATCH between serial and parallel enumeration!\n");
      return 1;
    }
  }

  {
    auto ds = gen_MS_dataset(2, 7);
    std::vector<Presentation> seeds;
    for (size_t i = 0; i < ds.size() && i < 64; ++i) seeds.push_back(ds[i].second);
    auto t0 = Clock::now();
    auto a = neighborhood_sizes(seeds, 5, MoveSet::kPrime, 1);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto b = neighborhood_sizes(seeds, 5, MoveSet::kPrime, threads);
    double tp = seconds_since(t0);
    printf("%-34s %10.3f %10.3f %6.2fx\n", "neighborhood sizes (64 seeds, k=5)",
           ts, tp, ts / tp);
    if (a != b) {
      printf("MISMATCH between serial and parallel neighborhood sweeps!\n");
      return 1;
    }
  }

  {
    auto ds = gen_MS_dataset(1, 5);
    std::vector<BatchInput> inputs;
    for (auto& [idx, p] : ds) inputs.push_back(BatchInput{p, idx.n, idx.w});
    BatchOptions opt;
    opt.algo = SearchAlgo::kGreedy;
    opt.max_nodes = 100000;
    opt.threads = 1;
    auto t0 = Clock::now();
    auto r1 = batch_solve(inputs, opt);
    double ts = seconds_since(t0);
    opt.threads = threads;
    t0 = Clock::now();
    auto r2 = batch_solve(inputs, opt);
    double tp = seconds_since(t0);
    size_t solved = 0;
    for (auto& it : r2) solved += it.result.solved;
    printf("%-34s %10.3f %10.3f %6.2fx  (solved %zu/%zu)\n",
           "greedy batch (n=1, |w|<=5)", ts, tp, ts / tp, solved, inputs.size());
    for (size_t i = 0; i < r1.size(); ++i) {
      if (r1[i].result.solved != r2[i].result.solved) {
        printf("MISMATCH between serial and parallel batch results!\n");
        return 1;
      }
    }
  }
  return 0;
}
