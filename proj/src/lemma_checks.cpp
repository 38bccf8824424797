#include "vtcrit/lemma_checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vtcrit {

GraphFacts compute_graph_facts(const Graph& g, const SymmetryOptions& opts) {
  GraphFacts f;
  f.connected = g.is_connected();
  f.bipartite = g.is_bipartite();
  f.has_triangle = g.has_triangle();
  f.regular_degree = g.regular_degree();
  f.girth = g.girth();
  f.odd_girth = g.odd_girth();
  f.vertex_transitive = g.n() <= opts.cap_n && is_vertex_transitive(g, opts);
  return f;
}

namespace {

int mis_recurse(const Graph& g, VertexSet active, int current, int best) {
  if (current + popcount(active) <= best) return best;
  if (active == 0) return std::max(best, current);
  // Pivot on the densest remaining vertex.
  int pivot = -1, pdeg = -1;
  for_each_vertex(active, [&](int v) {
    int d = popcount(g.neighbors(v) & active);
    if (d > pdeg) {
      pdeg = d;
      pivot = v;
    }
  });
  if (pdeg == 0) return std::max(best, current + popcount(active));
  best = mis_recurse(g, active & ~(g.neighbors(pivot) | bit(pivot)), current + 1, best);
  best = mis_recurse(g, active & ~bit(pivot), current, best);
  return best;
}

std::string set_string(VertexSet s) {
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

LemmaReport unmet(std::string id, std::string why) {
  LemmaReport r;
  r.lemma_id = std::move(id);
  r.hypotheses_met = false;
  r.note = std::move(why);
  return r;
}

LemmaReport verdict(std::string id, bool holds, std::string counterexample = {}) {
  LemmaReport r;
  r.lemma_id = std::move(id);
  r.hypotheses_met = true;
  r.conclusion_holds = holds;
  if (!holds) r.counterexample = std::move(counterexample);
  return r;
}

int trivial_component_count(const Graph& g, VertexSet x) {
  int count = 0;
  for (VertexSet comp : g.components(x))
    if (popcount(comp) == 1) ++count;
  return count;
}

}  // namespace

int independence_number(const Graph& g, int cap_n) {
  return independence_number(g, g.vertices(), cap_n);
}

int independence_number(const Graph& g, VertexSet active, int cap_n) {
  if (g.n() > cap_n)
    throw std::invalid_argument("independence number capped at configured size");
  return mis_recurse(g, active & g.vertices(), 0, 0);
}

VertexSet maximum_independent_set(const Graph& g, int cap_n) {
  VertexSet mis = 0, allowed = g.vertices();
  int remaining = independence_number(g, allowed, cap_n);
  for (int v = 0; v < g.n() && remaining > 0; ++v) {
    if (!contains(allowed, v)) continue;
    VertexSet after = allowed & ~(g.neighbors(v) | bit(v));
    if (1 + independence_number(g, after, cap_n) == remaining) {
      mis |= bit(v);
      allowed = after;
      --remaining;
    } else {
      allowed &= ~bit(v);
    }
  }
  return mis;
}

LemmaReport check_mantel(const Graph& g, const GraphFacts& facts) {
  if (facts.has_triangle) return unmet("mantel", "graph has a triangle (g0 = 3)");
  int n = g.n();
  bool holds = 4 * g.edge_count() <= n * n;
  return verdict("mantel", holds,
                 holds ? "" : "m=" + std::to_string(g.edge_count()));
}

LemmaReport check_order_girth(const Graph& g, const GraphFacts& facts) {
  if (!facts.regular_degree) return unmet("order_girth", "graph is not regular");
  if (facts.bipartite) return unmet("order_girth", "bipartite: odd girth undefined");
  if (*facts.odd_girth < 5) return unmet("order_girth", "odd girth below 5");
  bool holds = 2 * g.n() >= *facts.regular_degree * *facts.odd_girth;
  return verdict("order_girth", holds);
}

LemmaReport check_independence_bound(const Graph& g, const GraphFacts& facts) {
  if (facts.bipartite) return unmet("independence_bound", "graph is bipartite");
  if (!facts.vertex_transitive)
    return unmet("independence_bound", "graph is not vertex-transitive");
  if (!facts.regular_degree)
    return unmet("independence_bound", "graph is not regular");
  int alpha = independence_number(g);
  int n = g.n(), k = *facts.regular_degree;
  bool holds;
  if (*facts.odd_girth == 3)
    holds = 3 * alpha <= n;
  else
    holds = 4 * alpha <= 2 * n - k;  // g0 >= 5 branch, exact rationals
  return verdict("independence_bound", holds,
                 holds ? "" : "alpha=" + std::to_string(alpha));
}

LemmaReport check_girthX_bound(const Graph& g, VertexSet x, const GraphFacts& facts) {
  if (!facts.connected) return unmet("girth_x", "graph is disconnected");
  if (facts.bipartite) return unmet("girth_x", "graph is bipartite");
  if (!facts.vertex_transitive) return unmet("girth_x", "graph is not vertex-transitive");
  if (x == 0 || (x & ~g.vertices())) return unmet("girth_x", "bad subset");
  if (g.edges_within(x) > 0) return unmet("girth_x", "X is not independent");
  int t = popcount(x) - trivial_component_count(g, x);
  if (t < 1) return unmet("girth_x", "G-X has at least |X| trivial components");
  // g0 >= 2|X|/t + 1 in exact arithmetic.
  bool holds = static_cast<long long>(t) * (*facts.odd_girth - 1) >= 2LL * popcount(x);
  return verdict("girth_x", holds, holds ? "" : "X=" + set_string(x));
}

LemmaReport check_trivial_components_bound(const Graph& g, VertexSet x,
                                           const GraphFacts& facts) {
  if (!facts.has_triangle) return unmet("trivial_components", "graph is triangle-free");
  if (!facts.vertex_transitive)
    return unmet("trivial_components", "graph is not vertex-transitive");
  if (x & ~g.vertices()) return unmet("trivial_components", "bad subset");
  if (x == g.vertices()) return unmet("trivial_components", "X is the whole vertex set");
  bool holds = trivial_component_count(g, x) <= g.edges_within(x);
  return verdict("trivial_components", holds, holds ? "" : "X=" + set_string(x));
}

LemmaReport check_k36_condition(const Graph& g, const GraphFacts& facts) {
  if (!facts.connected) return unmet("k36", "graph is disconnected");
  if (facts.has_triangle) return unmet("k36", "graph has a triangle");
  if (!facts.vertex_transitive) return unmet("k36", "graph is not vertex-transitive");
  if (facts.regular_degree != 6) return unmet("k36", "graph is not 6-regular");
  if (g.n() % 2 != 0) return unmet("k36", "odd order");
  // Three distinct vertices with identical neighborhoods?
  bool triple = false;
  for (int v = 0; v < g.n() && !triple; ++v) {
    int same = 0;
    for (int w = 0; w < g.n(); ++w)
      if (g.neighbors(w) == g.neighbors(v)) ++same;
    triple = same >= 3;
  }
  if (!triple) return unmet("k36", "no three vertices share a neighborhood");
  return verdict("k36", facts.bipartite);
}

LemmaReport check_mantel(const Graph& g) { return check_mantel(g, compute_graph_facts(g)); }
LemmaReport check_order_girth(const Graph& g) {
  return check_order_girth(g, compute_graph_facts(g));
}
LemmaReport check_independence_bound(const Graph& g) {
  return check_independence_bound(g, compute_graph_facts(g));
}
LemmaReport check_girthX_bound(const Graph& g, VertexSet x) {
  return check_girthX_bound(g, x, compute_graph_facts(g));
}
LemmaReport check_trivial_components_bound(const Graph& g, VertexSet x) {
  return check_trivial_components_bound(g, x, compute_graph_facts(g));
}
LemmaReport check_k36_condition(const Graph& g) {
  return check_k36_condition(g, compute_graph_facts(g));
}

}  // namespace vtcrit
