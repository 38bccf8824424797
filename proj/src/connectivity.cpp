#include "vtcrit/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "vtcrit/kernels.hpp"
#include "vtcrit/symmetry.hpp"

namespace vtcrit {

namespace {

// Unit-capacity max flow via BFS augmentation; node count <= 128.
struct UnitFlow {
  int n = 0;
  std::vector<std::vector<int>> cap;

  explicit UnitFlow(int nodes) : n(nodes), cap(nodes, std::vector<int>(nodes, 0)) {}

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> parent(n);
    for (;;) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      std::vector<int> queue{s};
      for (size_t h = 0; h < queue.size() && parent[t] == -1; ++h) {
        int u = queue[h];
        for (int v = 0; v < n; ++v)
          if (parent[v] == -1 && cap[u][v] > 0) {
            parent[v] = u;
            queue.push_back(v);
          }
      }
      if (parent[t] == -1) return flow;
      for (int v = t; v != s; v = parent[v]) {
        cap[parent[v]][v] -= 1;
        cap[v][parent[v]] += 1;
      }
      ++flow;
    }
  }
};

int edge_flow(const Graph& g, int s, int t) {
  UnitFlow f(g.n());
  for (auto [u, v] : g.edges()) {
    f.cap[u][v] = 1;
    f.cap[v][u] = 1;
  }
  return f.max_flow(s, t);
}

// Internally vertex-disjoint s-t paths: split every vertex but s, t.
int vertex_flow(const Graph& g, int s, int t) {
  int n = g.n();
  const int inf = 2 * n;
  UnitFlow f(2 * n);  // v_in = v, v_out = n + v
  for (int v = 0; v < n; ++v) f.cap[v][n + v] = (v == s || v == t) ? inf : 1;
  for (auto [u, v] : g.edges()) {
    f.cap[n + u][v] = inf;
    f.cap[n + v][u] = inf;
  }
  return f.max_flow(n + s, t);
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (!g.is_connected()) return 0;
  if (g.n() == 1) return 0;
  int best = std::numeric_limits<int>::max();
  for (int t = 1; t < g.n(); ++t) best = std::min(best, edge_flow(g, 0, t));
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.n();
  if (!g.is_connected()) return 0;
  bool complete = g.edge_count() == n * (n - 1) / 2;
  if (complete) return n - 1;
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t));
  return best;
}

int tau(const Graph& g) {
  const int n = g.n();
  if (g.edge_count() == n * (n - 1) / 2)
    throw std::invalid_argument("tau undefined for complete graphs");
  int kappa = vertex_connectivity(g);
  if (kappa == 0) {
    int best = n;
    for (VertexSet comp : g.components()) best = std::min(best, popcount(comp));
    return best;
  }
  int best = n;
  auto total = kernels::binomial(n, kappa);
  VertexSet x = kernels::first_combination(kappa);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (!g.is_connected(x)) {
      for (VertexSet comp : g.components(x)) best = std::min(best, popcount(comp));
    }
    if (r + 1 < total) x = kernels::next_combination(x);
  }
  return best;
}

bool Fragment::valid_for(const Graph& g, int s) const {
  VertexSet comp = g.vertices() & ~members;
  return members != 0 && comp != 0 && popcount(members) >= s &&
         popcount(comp) >= s && g.is_subset_connected(members) &&
         g.is_subset_connected(comp) && g.boundary_size(members) == boundary;
}

namespace {

struct FragmentSearch {
  const Graph& g;
  int n, s;
  int best_lambda = std::numeric_limits<int>::max();
  int best_size = std::numeric_limits<int>::max();
  std::vector<VertexSet> atoms;
  int max_deg = 0;

  FragmentSearch(const Graph& graph, int target_s) : g(graph), n(graph.n()), s(target_s) {
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  }

  void offer(VertexSet x, int d) {
    int sz = popcount(x);
    if (d < best_lambda || (d == best_lambda && sz < best_size)) {
      best_lambda = d;
      best_size = sz;
      atoms.clear();
    }
    if (d == best_lambda && sz == best_size) atoms.push_back(x);
  }

  // Enumerates connected supersets of cur whose further growth only uses
  // vertices outside `forbidden`; every connected subset with minimum
  // vertex `root` is visited exactly once.
  void grow(VertexSet cur, int d, VertexSet forbidden) {
    int sz = popcount(cur);
    if (sz >= s && n - sz >= s && g.is_subset_connected(g.vertices() & ~cur))
      offer(cur, d);
    if (sz >= n - s) return;
    // Each added vertex can lower the boundary by at most its degree.
    if (best_lambda < std::numeric_limits<int>::max() &&
        d - max_deg * (n - s - sz) > best_lambda)
      return;
    VertexSet frontier = 0;
    for_each_vertex(cur, [&](int v) { frontier |= g.neighbors(v); });
    frontier &= ~cur & ~forbidden;
    VertexSet skipped = 0;
    for_each_vertex(frontier, [&](int v) {
      int delta = g.degree(v) - 2 * popcount(g.neighbors(v) & cur);
      grow(cur | bit(v), d + delta, forbidden | skipped);
      skipped |= bit(v);
    });
  }

  void run() {
    for (int root = 0; root < n; ++root)
      grow(bit(root), g.degree(root), full_set(root + 1) & ~bit(root));
  }
};

}  // namespace

std::optional<CutReport> restricted_edge_connectivity(const Graph& g, int s) {
  if (!g.is_connected())
    throw std::invalid_argument("restricted edge-connectivity needs a connected graph");
  if (s < 1 || 2 * s > g.n())
    throw std::invalid_argument("s out of range [1, n/2]");
  FragmentSearch search(g, s);
  search.run();
  if (search.atoms.empty()) return std::nullopt;
  CutReport rep;
  rep.lambda = search.best_lambda;
  rep.s = s;
  std::sort(search.atoms.begin(), search.atoms.end());
  for (VertexSet x : search.atoms)
    rep.atoms.push_back(Fragment{x, search.best_lambda});
  return rep;
}

namespace {

std::string mask_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_vertex(s, [&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace

AtomPropertyReport verify_atom_properties(const Graph& g, int s, int jobs) {
  if (!g.is_connected())
    throw std::invalid_argument("atom properties need a connected graph");
  if (s < 4 || s > 8) throw std::invalid_argument("atom properties need 4 <= s <= 8");
  auto cut = restricted_edge_connectivity(g, s);
  if (!cut)
    throw std::invalid_argument("no s-restricted edge-cut exists for this s");
  return verify_atom_properties(g, s, *cut, jobs);
}

AtomPropertyReport verify_atom_properties(const Graph& g, int s,
                                          const CutReport& cut, int jobs) {
  if (s < 4 || s > 8) throw std::invalid_argument("atom properties need 4 <= s <= 8");
  if (g.has_triangle())
    throw std::invalid_argument("atom properties need a triangle-free graph");
  auto k = g.regular_degree();
  if (!k || *k < 5)
    throw std::invalid_argument("atom properties need a regular graph of degree >= 5");
  if (!is_vertex_transitive(g))
    throw std::invalid_argument("atom properties need a vertex-transitive graph");
  if (cut.lambda > 3 * *k)
    throw std::invalid_argument("hypothesis lambda_s <= 3k fails");

  const int n = g.n();
  if (n > 24)
    throw std::invalid_argument("exhaustive atom-property check limited to n <= 24");
  AtomPropertyReport rep;
  rep.s = s;
  rep.k = *k;
  rep.lambda_s = cut.lambda;
  rep.atom_count = static_cast<int>(cut.atoms.size());

  // (a) every X with both sides >= s has d(X) >= lambda_s, strictly when
  // either side is disconnected.
  const VertexSet all = g.vertices();
  auto check_a = [&](VertexSet x) -> bool {
    int sz = popcount(x);
    if (sz < s || n - sz < s) return true;
    int d = 0;
    for_each_vertex(x, [&](int v) { d += popcount(g.neighbors(v) & ~x); });
    if (d < cut.lambda) return false;
    if (d == cut.lambda &&
        (!g.is_subset_connected(x) || !g.is_subset_connected(all & ~x)))
      return false;
    return true;
  };
  bool a_violation = false;
  VertexSet a_witness = 0;
#if defined(_OPENMP)
  if (jobs != 1) {
    std::int64_t bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) num_threads(kernels::resolve_jobs(jobs)) \
    reduction(min : bad)
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(all); ++x)
      if (!check_a(static_cast<VertexSet>(x)) && x < bad) bad = x;
    if (bad != std::numeric_limits<std::int64_t>::max()) {
      a_violation = true;
      a_witness = static_cast<VertexSet>(bad);
    }
    rep.checks_a = all - 1;
  } else
#endif
  {
    for (VertexSet x = 1; x < all && !a_violation; ++x) {
      ++rep.checks_a;
      if (!check_a(x)) {
        a_violation = true;
        a_witness = x;
      }
    }
  }
  if (a_violation)
    rep.violations.push_back("boundary bound fails for X=" + mask_string(a_witness));

  // (b) inside an atom S, every A with 1 <= |A| <= |S|-s keeps more than
  // half of its edges within S.
  for (const Fragment& atom : cut.atoms) {
    VertexSet sset = atom.members;
    int ssize = popcount(sset);
    if (ssize - s < 1) continue;
    for (VertexSet a = (sset - 1) & sset;; a = (a - 1) & sset) {
      if (a == 0) break;
      int asz = popcount(a);
      if (asz <= ssize - s) {
        ++rep.checks_b;
        int d_in = 0, d_total = 0;
        for_each_vertex(a, [&](int v) {
          d_in += popcount(g.neighbors(v) & (sset & ~a));
          d_total += popcount(g.neighbors(v) & ~a);
        });
        if (2 * d_in <= d_total) {
          rep.violations.push_back("inner-degree bound fails for atom " +
                                   mask_string(sset) + ", A=" + mask_string(a));
          break;
        }
      }
    }
  }

  // (c) overlapping atom pairs satisfy the submodular consequences and
  // the intersection/difference size bounds.
  for (size_t i = 0; i < cut.atoms.size(); ++i)
    for (size_t j = i + 1; j < cut.atoms.size(); ++j) {
      VertexSet sset = cut.atoms[i].members, tset = cut.atoms[j].members;
      if ((sset & tset) == 0) continue;
      ++rep.checks_c;
      auto d = [&](VertexSet x) { return x == 0 || x == all ? 0 : g.boundary_size(x); };
      bool ok = d(sset & tset) + d(sset | tset) <= 2 * cut.lambda &&
                d(sset & ~tset) + d(tset & ~sset) <= 2 * cut.lambda &&
                popcount(sset & tset) <= s - 1 && popcount(sset & ~tset) <= s - 1;
      if (!ok)
        rep.violations.push_back("atom pair bound fails for S=" + mask_string(sset) +
                                 ", T=" + mask_string(tset));
    }
  return rep;
}

SubsetBoundReport corollary_2subset_check(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("corollary check needs a connected graph");
  auto k = g.regular_degree();
  if (!k) throw std::invalid_argument("corollary check needs a regular graph");
  auto girth = g.girth();
  bool girth_ok = !girth || *girth > 3;
  if (!girth_ok && g.n() >= 2 * *k)
    throw std::invalid_argument("needs girth > 3 or order < 2k");
  if (!is_vertex_transitive(g))
    throw std::invalid_argument("corollary check needs a vertex-transitive graph");

  const int n = g.n();
  if (n > 24)
    throw std::invalid_argument("exhaustive subset check limited to n <= 24");
  SubsetBoundReport rep;
  rep.k = *k;
  rep.bound = 2 * *k - 2;
  rep.min_boundary = std::numeric_limits<int>::max();
  const VertexSet all = g.vertices();
  for (VertexSet x = 1; x < all; ++x) {
    int sz = popcount(x);
    if (sz < 2 || sz > n - 2) continue;
    int d = 0;
    for_each_vertex(x, [&](int v) { d += popcount(g.neighbors(v) & ~x); });
    if (d < rep.min_boundary) {
      rep.min_boundary = d;
      rep.argmin = x;
    }
  }
  rep.holds = rep.min_boundary >= rep.bound;
  return rep;
}

}  // namespace vtcrit
