#include "vtcrit/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace vtcrit::kernels {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

VertexSet first_combination(int p) { return full_set(p); }

VertexSet next_combination(VertexSet c) {
  VertexSet u = c & (~c + 1);
  VertexSet v = c + u;
  return v + (((v ^ c) / u) >> 2);
}

VertexSet combination_from_rank(std::uint64_t rank, int n, int p) {
  VertexSet m = 0;
  int hi = n;
  for (int i = p; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < hi && binomial(c + 1, i) <= rank) ++c;
    m |= bit(c);
    rank -= binomial(c, i);
    hi = c;
  }
  return m;
}

namespace {

constexpr int kSweepCap = 28;

void check_sweep_size(const Graph& g) {
  if (g.n() > kSweepCap)
    throw std::invalid_argument("full-subset sweep limited to n <= 28");
}

}  // namespace

std::vector<int> min_boundary_by_size_serial(const Graph& g) {
  check_sweep_size(g);
  const int n = g.n();
  std::vector<int> best(n + 1, std::numeric_limits<int>::max());
  const VertexSet all = g.vertices();
  for (VertexSet x = 1; x < all; ++x) {
    int sz = popcount(x);
    int d = 0;
    for_each_vertex(x, [&](int v) { d += popcount(g.neighbors(v) & ~x); });
    best[sz] = std::min(best[sz], d);
  }
  return best;
}

std::vector<int> min_boundary_by_size_parallel(const Graph& g, int jobs) {
  check_sweep_size(g);
  const int n = g.n();
  const VertexSet all = g.vertices();
  const int nthreads = resolve_jobs(jobs);
  std::vector<std::vector<int>> partial(
      nthreads, std::vector<int>(n + 1, std::numeric_limits<int>::max()));
#if defined(_OPENMP)
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<int>& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(all); ++x) {
      VertexSet m = static_cast<VertexSet>(x);
      int d = 0;
      for_each_vertex(m, [&](int v) { d += popcount(g.neighbors(v) & ~m); });
      int sz = popcount(m);
      mine[sz] = std::min(mine[sz], d);
    }
  }
#else
  partial[0] = min_boundary_by_size_serial(g);
#endif
  std::vector<int> best(n + 1, std::numeric_limits<int>::max());
  for (const auto& part : partial)
    for (int i = 0; i <= n; ++i) best[i] = std::min(best[i], part[i]);
  return best;
}

std::vector<VertexSet> collect_min_boundary_sets(const Graph& g, int lo, int hi,
                                                 int d_target, int size_target) {
  check_sweep_size(g);
  std::vector<VertexSet> out;
  const VertexSet all = g.vertices();
  for (VertexSet x = 1; x < all; ++x) {
    int sz = popcount(x);
    if (sz != size_target || sz < lo || sz > hi) continue;
    if (g.boundary_size(x) == d_target) out.push_back(x);
  }
  return out;
}

namespace {

struct FragmentPartial {
  int lambda = std::numeric_limits<int>::max();
  int atom_size = std::numeric_limits<int>::max();
  std::vector<VertexSet> atoms;

  void offer(const Graph& g, VertexSet x, int d) {
    int sz = popcount(x);
    if (d < lambda || (d == lambda && sz < atom_size)) {
      lambda = d;
      atom_size = sz;
      atoms.clear();
    }
    if (d == lambda && sz == atom_size) atoms.push_back(x);
    (void)g;
  }

  void merge(const FragmentPartial& other) {
    if (other.lambda < lambda ||
        (other.lambda == lambda && other.atom_size < atom_size)) {
      lambda = other.lambda;
      atom_size = other.atom_size;
      atoms = other.atoms;
    } else if (other.lambda == lambda && other.atom_size == atom_size) {
      atoms.insert(atoms.end(), other.atoms.begin(), other.atoms.end());
    }
  }
};

FragmentSweep finish_fragment(FragmentPartial p) {
  FragmentSweep out;
  if (p.lambda == std::numeric_limits<int>::max()) return out;
  std::sort(p.atoms.begin(), p.atoms.end());
  out.exists = true;
  out.lambda = p.lambda;
  out.atom_size = p.atom_size;
  out.atoms = std::move(p.atoms);
  return out;
}

}  // namespace

FragmentSweep fragment_sweep_serial(const Graph& g, int s) {
  check_sweep_size(g);
  const int n = g.n();
  const VertexSet all = g.vertices();
  FragmentPartial part;
  for (VertexSet x = 1; x < all; ++x) {
    int sz = popcount(x);
    if (sz < s || n - sz < s) continue;
    if (!g.is_subset_connected(x) || !g.is_subset_connected(all & ~x)) continue;
    part.offer(g, x, g.boundary_size(x));
  }
  return finish_fragment(std::move(part));
}

FragmentSweep fragment_sweep_parallel(const Graph& g, int s, int jobs) {
  check_sweep_size(g);
  const int n = g.n();
  const VertexSet all = g.vertices();
  const int nthreads = resolve_jobs(jobs);
  std::vector<FragmentPartial> partial(nthreads);
#if defined(_OPENMP)
#pragma omp parallel num_threads(nthreads)
  {
    FragmentPartial& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t xi = 1; xi < static_cast<std::int64_t>(all); ++xi) {
      VertexSet x = static_cast<VertexSet>(xi);
      int sz = popcount(x);
      if (sz < s || n - sz < s) continue;
      if (!g.is_subset_connected(x) || !g.is_subset_connected(all & ~x)) continue;
      mine.offer(g, x, g.boundary_size(x));
    }
  }
#else
  return fragment_sweep_serial(g, s);
#endif
  FragmentPartial merged;
  for (auto& p : partial) merged.merge(p);
  return finish_fragment(std::move(merged));
}

}  // namespace vtcrit::kernels
