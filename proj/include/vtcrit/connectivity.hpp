#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vtcrit/graph.hpp"

namespace vtcrit {

int edge_connectivity(const Graph& g);    // 0 for disconnected input
int vertex_connectivity(const Graph& g);  // n-1 for complete graphs

// Minimum, over all minimum vertex-cuts X, of the smallest component
// order of G-X. Rejects complete graphs (no vertex-cut exists).
int tau(const Graph& g);

struct Fragment {
  VertexSet members = 0;
  int boundary = 0;

  // Both sides connected, both sides at least s vertices.
  bool valid_for(const Graph& g, int s) const;
};

struct CutReport {
  int lambda = 0;
  int s = 0;
  std::vector<Fragment> atoms;  // every minimum-size minimizer, ascending mask order
};

// lambda_s(G): minimum d(X) over X with |X| >= s, |complement| >= s and
// both sides connected; nullopt when no such X exists. Implemented as a
// grow-from-seed enumeration of connected subsets; the full-subset sweep
// in kernels.hpp is the independent cross-check.
std::optional<CutReport> restricted_edge_connectivity(const Graph& g, int s);

struct AtomPropertyReport {
  int s = 0;
  int k = 0;
  int lambda_s = 0;
  int atom_count = 0;
  std::uint64_t checks_a = 0, checks_b = 0, checks_c = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive verification of the three lambda_s-atom properties
// (boundary lower bounds, inner-degree domination on atoms, and the
// submodular bounds on atom pairs) for a connected triangle-free
// vertex-transitive graph of degree k >= 5 with 4 <= s <= 8 and
// lambda_s <= 3k. Throws when those hypotheses fail.
AtomPropertyReport verify_atom_properties(const Graph& g, int s, int jobs = 1);
AtomPropertyReport verify_atom_properties(const Graph& g, int s,
                                          const CutReport& cut, int jobs = 1);

struct SubsetBoundReport {
  int k = 0;
  int bound = 0;         // 2k-2
  int min_boundary = 0;  // over all X with 2 <= |X| <= n-2
  VertexSet argmin = 0;
  bool holds = false;
};

// d(X) >= 2k-2 for every X with 2 <= |X| <= n-2, verified exhaustively.
// Requires a connected vertex-transitive regular graph with girth > 3 or
// order < 2k.
SubsetBoundReport corollary_2subset_check(const Graph& g);

}  // namespace vtcrit
