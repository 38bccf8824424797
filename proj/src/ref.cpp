#include "vtcrit/ref.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace vtcrit::ref {

int matching_number(const Graph& g, VertexSet removed) {
  VertexSet active = g.vertices() & ~removed;
  if (active == 0) return 0;
  int v = lowest_vertex(active);
  int best = matching_number(g, removed | bit(v));
  for_each_vertex(g.neighbors(v) & active, [&](int u) {
    best = std::max(best, 1 + matching_number(g, removed | bit(v) | bit(u)));
  });
  return best;
}

int max_deficiency(const Graph& g) {
  int best = std::numeric_limits<int>::min();
  for (VertexSet x = 0; x < (VertexSet{1} << g.n()); ++x)
    best = std::max(best, g.odd_component_count(x) - popcount(x));
  return best;
}

VertexSet max_deficiency_witness(const Graph& g) {
  int best = std::numeric_limits<int>::min();
  VertexSet arg = 0;
  for (VertexSet x = 0; x < (VertexSet{1} << g.n()); ++x) {
    int v = g.odd_component_count(x) - popcount(x);
    if (v > best) {
      best = v;
      arg = x;
    }
  }
  return arg;
}

bool p_factor_critical(const Graph& g, int p) {
  if ((g.n() - p) % 2 != 0 || p < 0 || p > g.n())
    throw std::invalid_argument("bad p");
  for (VertexSet x = 0; x < (VertexSet{1} << g.n()); ++x)
    if (popcount(x) >= p && g.odd_component_count(x) > popcount(x) - p)
      return false;
  return true;
}

int edge_connectivity(const Graph& g) {
  if (!g.is_connected()) return 0;
  int best = std::numeric_limits<int>::max();
  const VertexSet all = g.vertices();
  for (VertexSet x = 1; x < all; ++x) best = std::min(best, g.boundary_size(x));
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.n();
  if (!g.is_connected()) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  int best = n;
  for (VertexSet x = 0; x < (VertexSet{1} << n); ++x)
    if (popcount(x) < best && !g.is_connected(x) && popcount(g.vertices() & ~x) > 1)
      best = popcount(x);
  return best;
}

int tau(const Graph& g) {
  int kappa = vertex_connectivity(g);
  if (kappa == g.n() - 1) throw std::invalid_argument("complete graph");
  int best = g.n();
  for (VertexSet x = 0; x < (VertexSet{1} << g.n()); ++x) {
    if (popcount(x) != kappa) continue;
    auto comps = g.components(x);
    if (comps.size() < 2) continue;
    for (VertexSet c : comps) best = std::min(best, popcount(c));
  }
  return best;
}

std::optional<int> lambda_s(const Graph& g, int s) {
  const int n = g.n();
  const VertexSet all = g.vertices();
  int best = std::numeric_limits<int>::max();
  for (VertexSet x = 1; x < all; ++x) {
    int sz = popcount(x);
    if (sz < s || n - sz < s) continue;
    if (!g.is_subset_connected(x) || !g.is_subset_connected(all & ~x)) continue;
    best = std::min(best, g.boundary_size(x));
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (VertexSet x = 0; x < (VertexSet{1} << g.n()); ++x) {
    if (popcount(x) <= best) continue;
    bool independent = true;
    for_each_vertex(x, [&](int v) {
      if (g.neighbors(v) & x) independent = false;
    });
    if (independent) best = popcount(x);
  }
  return best;
}

std::uint64_t automorphism_count(const Graph& g) {
  const int n = g.n();
  if (n > 8) throw std::invalid_argument("automorphism count limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

// Shortest cycle through `start` using vertices >= start, by DFS over
// simple paths.
void path_dfs(const Graph& g, int start, int cur, VertexSet used, int len,
              int& best_any, int& best_odd) {
  for_each_vertex(g.neighbors(cur), [&](int nxt) {
    if (nxt == start && len >= 2) {
      best_any = std::min(best_any, len + 1);
      if ((len + 1) % 2 == 1) best_odd = std::min(best_odd, len + 1);
      return;
    }
    if (nxt <= start || contains(used, nxt)) return;
    if (len + 1 >= best_any && len + 1 >= best_odd) return;
    path_dfs(g, start, nxt, used | bit(nxt), len + 1, best_any, best_odd);
  });
}

void cycle_scan(const Graph& g, int& best_any, int& best_odd) {
  best_any = best_odd = g.n() + 1;
  for (int start = 0; start < g.n(); ++start)
    path_dfs(g, start, start, bit(start), 0, best_any, best_odd);
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  int any, odd;
  cycle_scan(g, any, odd);
  if (any > g.n()) return std::nullopt;
  return any;
}

std::optional<int> odd_girth(const Graph& g) {
  int any, odd;
  cycle_scan(g, any, odd);
  if (odd > g.n()) return std::nullopt;
  return odd;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  const int n = a.n();
  if (n > 8) throw std::invalid_argument("isomorphism check limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace vtcrit::ref
