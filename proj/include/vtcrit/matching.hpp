#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vtcrit/graph.hpp"
#include "vtcrit/kernels.hpp"

namespace vtcrit {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct Matching {
  std::vector<std::pair<int, int>> pairs;
  VertexSet covered = 0;
  int size() const { return static_cast<int>(pairs.size()); }
};

// All matching routines work on G - removed without copying the graph.
Matching maximum_matching(const Graph& g, VertexSet removed = 0);
int matching_number(const Graph& g, VertexSet removed = 0);
bool has_perfect_matching(const Graph& g, VertexSet removed = 0);
int deficiency(const Graph& g, VertexSet removed = 0);

// Canonical Berge-Tutte witness A = N(D) \ D, where D is the set of
// vertices missed by some maximum matching. c0(G-A) - |A| equals the
// deficiency. Original labels.
VertexSet berge_witness(const Graph& g, VertexSet removed = 0);

struct GEDecomposition {
  VertexSet x = 0;
  std::vector<VertexSet> components;                  // components of G - x
  std::vector<std::pair<int, int>> matching_into;     // (x-vertex, component index)
};

// A set x with (1) x matchable to the components of G-x and (2) every
// component factor-critical. Starts from the canonical Berge witness and
// deterministically grows it until (2) holds; |x| = #components iff the
// graph has a perfect matching.
GEDecomposition gallai_edmonds(const Graph& g, VertexSet removed = 0);

struct CriticalityWitness {
  VertexSet x = 0;
  int odd_components = 0;
};

struct PfcOptions {
  int jobs = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct PfcResult {
  kernels::SweepStatus status = kernels::SweepStatus::all_pass;
  bool critical() const { return status == kernels::SweepStatus::all_pass; }
  std::optional<VertexSet> failing_set;          // lowest failing p-set
  std::optional<CriticalityWitness> witness;     // failing set + Berge witness of the rest
};

// Whether G - S has a perfect matching for every p-subset S. Throws when
// p and n have different parities or p is out of range.
PfcResult is_p_factor_critical(const Graph& g, int p, const PfcOptions& opts = {});

// Parity aliases; wrong parity yields false rather than an error.
bool is_factor_critical(const Graph& g);
bool is_bicritical(const Graph& g);

struct QExtResult {
  kernels::SweepStatus status = kernels::SweepStatus::all_pass;
  bool extendable() const { return status == kernels::SweepStatus::all_pass; }
  std::vector<std::pair<int, int>> blocking;  // a q-matching with no extension
};

// Every matching of size q extends to a perfect matching. Requires even
// order, connected input and 0 <= q < n/2.
QExtResult is_q_extendable(const Graph& g, int q, std::uint64_t budget = kDefaultBudget);

// Union of all perfect matchings is a connected spanning subgraph.
// Requires even order; graphs without a perfect matching give false.
bool is_elementary(const Graph& g);

// Edges uv with G-{u,v} having a perfect matching, as adjacency masks.
std::vector<VertexSet> allowed_edge_adjacency(const Graph& g);

struct No4fcWitness {
  VertexSet x = 0;                    // |x| >= 4, c0(G-x) = |x| - 2
  std::vector<VertexSet> components;  // all factor-critical
};

// For a bicritical graph of even order: nullopt when 4-factor-critical,
// otherwise a failing 4-set extended by the Gallai-Edmonds set of the
// remainder. Throws when the graph is not bicritical.
std::optional<No4fcWitness> find_no4fc_witness(const Graph& g,
                                               const PfcOptions& opts = {});

}  // namespace vtcrit
