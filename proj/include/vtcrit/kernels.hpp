#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "vtcrit/graph.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace vtcrit::kernels {

// Saturating binomial coefficient (caps at UINT64_MAX).
std::uint64_t binomial(int n, int k);

// p-subsets of {0..n-1} as masks in ascending numeric (colex) order.
VertexSet first_combination(int p);
VertexSet next_combination(VertexSet c);  // Gosper's hack
VertexSet combination_from_rank(std::uint64_t rank, int n, int p);

enum class SweepStatus { all_pass, found, budget_exceeded };

struct SubsetSweepResult {
  SweepStatus status = SweepStatus::all_pass;
  VertexSet first_failing = 0;  // lowest-rank failing subset when found
  std::uint64_t total = 0;      // number of p-subsets
};

inline int resolve_jobs(int jobs) {
#if defined(_OPENMP)
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

// Scans all p-subsets of {0..n-1} for the lowest-rank one failing `pred`.
// The parallel version returns bit-identical results to the serial one:
// it minimizes the failing rank instead of taking the first hit.
template <typename Pred>
SubsetSweepResult sweep_combinations_serial(int n, int p, std::uint64_t budget,
                                            Pred&& pred) {
  SubsetSweepResult res;
  res.total = binomial(n, p);
  if (res.total > budget) {
    res.status = SweepStatus::budget_exceeded;
    return res;
  }
  VertexSet m = first_combination(p);
  for (std::uint64_t r = 0; r < res.total; ++r) {
    if (!pred(m)) {
      res.status = SweepStatus::found;
      res.first_failing = m;
      return res;
    }
    if (r + 1 < res.total) m = next_combination(m);
  }
  return res;
}

template <typename Pred>
SubsetSweepResult sweep_combinations_parallel(int n, int p, std::uint64_t budget,
                                              int jobs, Pred&& pred) {
  SubsetSweepResult res;
  res.total = binomial(n, p);
  if (res.total > budget) {
    res.status = SweepStatus::budget_exceeded;
    return res;
  }
  const std::uint64_t total = res.total;
  std::atomic<std::uint64_t> best{total};
  const std::uint64_t block = 1024;
  const std::int64_t nblocks = static_cast<std::int64_t>((total + block - 1) / block);
  const int nthreads = resolve_jobs(jobs);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
  for (std::int64_t b = 0; b < nblocks; ++b) {
    std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    std::uint64_t hi = std::min(lo + block, total);
    VertexSet m = combination_from_rank(lo, n, p);
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (r >= best.load(std::memory_order_relaxed)) break;
      if (!pred(m)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        break;
      }
      if (r + 1 < hi) m = next_combination(m);
    }
  }
  std::uint64_t found = best.load();
  if (found < total) {
    res.status = SweepStatus::found;
    res.first_failing = combination_from_rank(found, n, p);
  }
  return res;
}

// min d_G(X) per |X| over every X with 0 < |X| < n. Index = subset size;
// entries 0 and n stay at INT_MAX. Requires n <= 28.
std::vector<int> min_boundary_by_size_serial(const Graph& g);
std::vector<int> min_boundary_by_size_parallel(const Graph& g, int jobs);

// All X with lo <= |X| <= hi, d(X) == d_target, |X| == size_target,
// ascending mask order.
std::vector<VertexSet> collect_min_boundary_sets(const Graph& g, int lo, int hi,
                                                 int d_target, int size_target);

struct FragmentSweep {
  bool exists = false;
  int lambda = 0;
  int atom_size = 0;
  std::vector<VertexSet> atoms;  // ascending mask order
};

// Full-subset reference for the s-restricted edge-connectivity: scans all
// 2^n subsets for both-sides-connected X with both sides >= s. Requires
// n <= 28.
FragmentSweep fragment_sweep_serial(const Graph& g, int s);
FragmentSweep fragment_sweep_parallel(const Graph& g, int s, int jobs);

}  // namespace vtcrit::kernels
