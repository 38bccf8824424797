#pragma once

#include <optional>
#include <string>

#include "vtcrit/graph.hpp"
#include "vtcrit/symmetry.hpp"

namespace vtcrit {

// Hypothesis inputs shared by the lemma verifiers. The harness computes
// these once per graph; the single-argument checker overloads compute
// them on the fly.
struct GraphFacts {
  bool connected = false;
  bool bipartite = false;
  bool has_triangle = false;
  bool vertex_transitive = false;
  std::optional<int> regular_degree;
  std::optional<int> girth;
  std::optional<int> odd_girth;
};

GraphFacts compute_graph_facts(const Graph& g, const SymmetryOptions& opts = {});

struct LemmaReport {
  std::string lemma_id;
  bool hypotheses_met = false;
  std::optional<bool> conclusion_holds;  // set only when hypotheses_met
  std::optional<std::string> counterexample;
  std::string note;  // unmet-hypothesis reason or extra detail

  bool violated() const { return hypotheses_met && conclusion_holds && !*conclusion_holds; }
};

// Exact maximum independent set size by branch and bound.
int independence_number(const Graph& g, int cap_n = 32);
int independence_number(const Graph& g, VertexSet active, int cap_n);
// Lexicographically smallest maximum independent set.
VertexSet maximum_independent_set(const Graph& g, int cap_n = 32);

// Triangle-free graphs have at most n^2/4 edges.
LemmaReport check_mantel(const Graph& g, const GraphFacts& facts);
// k-regular with finite odd girth >= 5 forces order >= k*g0/2.
LemmaReport check_order_girth(const Graph& g, const GraphFacts& facts);
// Independence bound for non-bipartite vertex-transitive k-regular
// graphs: alpha <= n/2 - k/4 when g0 >= 5, alpha <= n/3 when g0 = 3.
LemmaReport check_independence_bound(const Graph& g, const GraphFacts& facts);
// For independent X where G-X has |X|-t trivial components (t >= 1):
// g0 >= 2|X|/t + 1.
LemmaReport check_girthX_bound(const Graph& g, VertexSet x, const GraphFacts& facts);
// In a vertex-transitive graph with a triangle, G-X has at most |E(X)|
// trivial components.
LemmaReport check_trivial_components_bound(const Graph& g, VertexSet x,
                                           const GraphFacts& facts);
// Connected triangle-free vertex-transitive 6-regular graph of even
// order with three vertices sharing a neighborhood must be bipartite.
LemmaReport check_k36_condition(const Graph& g, const GraphFacts& facts);

LemmaReport check_mantel(const Graph& g);
LemmaReport check_order_girth(const Graph& g);
LemmaReport check_independence_bound(const Graph& g);
LemmaReport check_girthX_bound(const Graph& g, VertexSet x);
LemmaReport check_trivial_components_bound(const Graph& g, VertexSet x);
LemmaReport check_k36_condition(const Graph& g);

}  // namespace vtcrit
