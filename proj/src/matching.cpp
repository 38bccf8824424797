#include "vtcrit/matching.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace vtcrit {

namespace {

// Blossom-shrinking maximum matching over the active vertex set. All
// state lives on the stack so the sweeps can call this millions of times.
struct Blossom {
  const Graph& g;
  VertexSet active;
  std::array<int, kMaxVertices> match, parent, base;
  std::array<int, kMaxVertices> queue;
  VertexSet used = 0, in_blossom = 0;

  Blossom(const Graph& graph, VertexSet removed)
      : g(graph), active(graph.vertices() & ~removed) {
    match.fill(-1);
  }

  int lowest_common_base(int a, int b) {
    VertexSet seen = 0;
    for (;;) {
      a = base[a];
      seen |= bit(a);
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (contains(seen, b)) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom |= bit(base[v]);
      in_blossom |= bit(base[match[v]]);
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  // BFS for an augmenting path from root; returns its free endpoint.
  int find_path(int root) {
    used = bit(root);
    for_each_vertex(active, [&](int v) {
      parent[v] = -1;
      base[v] = v;
    });
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      VertexSet nbrs = g.neighbors(v) & active;
      while (nbrs) {
        int to = lowest_vertex(nbrs);
        nbrs &= nbrs - 1;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom.
          int b = lowest_common_base(v, to);
          in_blossom = 0;
          mark_path(v, b, to);
          mark_path(to, b, v);
          for_each_vertex(active, [&](int i) {
            if (contains(in_blossom, base[i])) {
              base[i] = b;
              if (!contains(used, i)) {
                used |= bit(i);
                queue[tail++] = i;
              }
            }
          });
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used |= bit(match[to]);
          queue[tail++] = match[to];
        }
      }
    }
    return -1;
  }

  void augment(int u) {
    while (u != -1) {
      int pv = parent[u], next = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = next;
    }
  }

  int run() {
    // Greedy seed matching.
    for_each_vertex(active, [&](int u) {
      if (match[u] != -1) return;
      VertexSet cand = g.neighbors(u) & active;
      while (cand) {
        int v = lowest_vertex(cand);
        cand &= cand - 1;
        if (match[v] == -1) {
          match[u] = v;
          match[v] = u;
          break;
        }
      }
    });
    for_each_vertex(active, [&](int v) {
      if (match[v] == -1) {
        int end = find_path(v);
        if (end != -1) augment(end);
      }
    });
    int covered = 0;
    for_each_vertex(active, [&](int v) {
      if (match[v] != -1) ++covered;
    });
    return covered / 2;
  }
};

}  // namespace

Matching maximum_matching(const Graph& g, VertexSet removed) {
  Blossom b(g, removed);
  b.run();
  Matching m;
  for_each_vertex(b.active, [&](int v) {
    if (b.match[v] > v) {
      m.pairs.emplace_back(v, b.match[v]);
      m.covered |= bit(v) | bit(b.match[v]);
    }
  });
  return m;
}

int matching_number(const Graph& g, VertexSet removed) {
  Blossom b(g, removed);
  return b.run();
}

bool has_perfect_matching(const Graph& g, VertexSet removed) {
  int active = popcount(g.vertices() & ~removed);
  if (active % 2 != 0) return false;
  return 2 * matching_number(g, removed) == active;
}

int deficiency(const Graph& g, VertexSet removed) {
  int active = popcount(g.vertices() & ~removed);
  return active - 2 * matching_number(g, removed);
}

VertexSet berge_witness(const Graph& g, VertexSet removed) {
  VertexSet active = g.vertices() & ~removed;
  int nu = matching_number(g, removed);
  VertexSet missed = 0;  // D: vertices some maximum matching leaves exposed
  for_each_vertex(active, [&](int v) {
    if (matching_number(g, removed | bit(v)) == nu) missed |= bit(v);
  });
  VertexSet nbrs = 0;
  for_each_vertex(missed, [&](int v) { nbrs |= g.neighbors(v); });
  return nbrs & active & ~missed;
}

GEDecomposition gallai_edmonds(const Graph& g, VertexSet removed) {
  const VertexSet active = g.vertices() & ~removed;
  VertexSet x = berge_witness(g, removed);
  // Grow x, keeping c0(G-x) - |x| at the deficiency, until every
  // component is factor-critical. Even components admit a single-vertex
  // step; odd non-critical ones need a bad vertex plus the Berge witness
  // of what remains.
  for (;;) {
    bool changed = false;
    for (VertexSet comp : g.components(removed | x)) {
      if (popcount(comp) % 2 == 0) {
        x |= bit(lowest_vertex(comp));
        changed = true;
        break;
      }
      int bad = -1;
      for_each_vertex(comp, [&](int v) {
        if (bad == -1 && !has_perfect_matching(g, ~comp | bit(v))) bad = v;
      });
      if (bad != -1) {
        x |= bit(bad) | berge_witness(g, ~comp | bit(bad));
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }

  GEDecomposition dec;
  dec.x = x;
  dec.components = g.components(removed | x);

  // x is matchable to the components; realize an injection by augmenting
  // paths over (x-vertex, component) pairs.
  int nc = static_cast<int>(dec.components.size());
  std::vector<int> comp_owner(nc, -1);
  auto xs = set_to_vertices(x);
  std::vector<std::vector<int>> cand(xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    for (int c = 0; c < nc; ++c)
      if (g.neighbors(xs[i]) & dec.components[c]) cand[i].push_back(c);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int c : cand[i]) {
      if (seen[c]) continue;
      seen[c] = 1;
      if (comp_owner[c] == -1 || self(self, comp_owner[c])) {
        comp_owner[c] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < xs.size(); ++i) {
    seen.assign(nc, 0);
    bool ok = augment(augment, static_cast<int>(i));
    assert(ok && "Berge witness must be matchable to the components");
    (void)ok;
  }
  for (int c = 0; c < nc; ++c)
    if (comp_owner[c] != -1) dec.matching_into.emplace_back(xs[comp_owner[c]], c);
  std::sort(dec.matching_into.begin(), dec.matching_into.end());
  return dec;
}

PfcResult is_p_factor_critical(const Graph& g, int p, const PfcOptions& opts) {
  const int n = g.n();
  if (p < 0 || p > n) throw std::invalid_argument("p out of range");
  if ((n - p) % 2 != 0)
    throw std::invalid_argument("p must have the parity of the vertex count");
  auto pred = [&](VertexSet s) { return has_perfect_matching(g, s); };
  auto sweep = opts.jobs == 1
                   ? kernels::sweep_combinations_serial(n, p, opts.budget, pred)
                   : kernels::sweep_combinations_parallel(n, p, opts.budget,
                                                          opts.jobs, pred);
  PfcResult res;
  res.status = sweep.status;
  if (sweep.status == kernels::SweepStatus::found) {
    res.failing_set = sweep.first_failing;
    VertexSet w = sweep.first_failing | berge_witness(g, sweep.first_failing);
    res.witness = CriticalityWitness{w, g.odd_component_count(w)};
  }
  return res;
}

bool is_factor_critical(const Graph& g) {
  if (g.n() % 2 != 1) return false;
  return is_p_factor_critical(g, 1).critical();
}

bool is_bicritical(const Graph& g) {
  if (g.n() % 2 != 0) return false;
  return is_p_factor_critical(g, 2).critical();
}

namespace {

// Enumerates matchings of size q in edge-list order; returns false when
// aborted by the budget.
template <typename Fn>
bool enumerate_q_matchings(const std::vector<std::pair<int, int>>& edges,
                           int q, std::uint64_t budget, std::uint64_t& count,
                           size_t from, VertexSet used,
                           std::vector<std::pair<int, int>>& chosen, Fn&& fn,
                           bool& stop) {
  if (static_cast<int>(chosen.size()) == q) {
    if (++count > budget) return false;
    if (!fn(chosen, used)) stop = true;
    return true;
  }
  for (size_t i = from; i < edges.size() && !stop; ++i) {
    auto [u, v] = edges[i];
    if (contains(used, u) || contains(used, v)) continue;
    chosen.push_back(edges[i]);
    bool ok = enumerate_q_matchings(edges, q, budget, count, i + 1,
                                    used | bit(u) | bit(v), chosen, fn, stop);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

QExtResult is_q_extendable(const Graph& g, int q, std::uint64_t budget) {
  const int n = g.n();
  if (n % 2 != 0) throw std::invalid_argument("q-extendability needs even order");
  if (q < 0 || 2 * q >= n) throw std::invalid_argument("q out of range [0, n/2)");
  if (!g.is_connected()) throw std::invalid_argument("q-extendability needs a connected graph");
  QExtResult res;
  if (!has_perfect_matching(g)) {
    res.status = kernels::SweepStatus::found;
    return res;
  }
  auto edges = g.edges();
  std::vector<std::pair<int, int>> chosen;
  std::uint64_t count = 0;
  bool stop = false;
  bool within_budget = enumerate_q_matchings(
      edges, q, budget, count, 0, 0, chosen,
      [&](const std::vector<std::pair<int, int>>& m, VertexSet used) {
        if (!has_perfect_matching(g, used)) {
          res.blocking = m;
          return false;
        }
        return true;
      },
      stop);
  if (!within_budget)
    res.status = kernels::SweepStatus::budget_exceeded;
  else if (stop)
    res.status = kernels::SweepStatus::found;
  return res;
}

std::vector<VertexSet> allowed_edge_adjacency(const Graph& g) {
  std::vector<VertexSet> allowed(g.n(), 0);
  for (auto [u, v] : g.edges())
    if (has_perfect_matching(g, bit(u) | bit(v))) {
      allowed[u] |= bit(v);
      allowed[v] |= bit(u);
    }
  return allowed;
}

bool is_elementary(const Graph& g) {
  if (g.n() % 2 != 0) throw std::invalid_argument("elementary test needs even order");
  if (!has_perfect_matching(g)) return false;
  auto allowed = allowed_edge_adjacency(g);
  VertexSet seen = bit(0);
  for (;;) {
    VertexSet next = seen;
    for_each_vertex(seen, [&](int v) { next |= allowed[v]; });
    if (next == seen) break;
    seen = next;
  }
  return seen == g.vertices();
}

std::optional<No4fcWitness> find_no4fc_witness(const Graph& g,
                                               const PfcOptions& opts) {
  if (g.n() % 2 != 0)
    throw std::invalid_argument("expects a bicritical graph of even order");
  if (!is_bicritical(g)) throw std::invalid_argument("graph is not bicritical");
  auto pfc = is_p_factor_critical(g, 4, opts);
  if (pfc.critical()) return std::nullopt;
  if (pfc.status == kernels::SweepStatus::budget_exceeded)
    throw std::runtime_error("4-factor-criticality sweep exceeded budget");
  VertexSet x1 = *pfc.failing_set;
  GEDecomposition dec = gallai_edmonds(g, x1);
  No4fcWitness w;
  w.x = x1 | dec.x;
  w.components = dec.components;
  assert(g.odd_component_count(w.x) == popcount(w.x) - 2);
  return w;
}

}  // namespace vtcrit
