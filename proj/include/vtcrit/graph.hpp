#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "vtcrit/bits.hpp"

namespace vtcrit {

class GroupTable;

// Immutable simple undirected graph on vertices 0..n-1 with bitmask
// adjacency rows. Deletion-style operations take a `removed` mask instead
// of rebuilding the graph, so subset sweeps never allocate.
class Graph {
 public:
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  // Circulant on Z_n: i ~ i+-s for each residue s in [1, n/2]; s = n/2
  // contributes a single neighbor.
  static Graph circulant(int n, const std::vector<int>& connection_set);

  // Cayley graph: element g adjacent to g*s for s in `connection`, which
  // must exclude the identity and be closed under inverses.
  static Graph cayley(const GroupTable& group, const std::vector<int>& connection);

  // Catalog: "petersen", "K<n>", "K<a>,<b>", "C<n>".
  static Graph named(std::string_view name);

  int n() const { return n_; }
  int edge_count() const { return edge_count_; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VertexSet vertices() const { return full_set(n_); }

  std::vector<std::pair<int, int>> edges() const;
  int min_degree() const;
  std::optional<int> regular_degree() const;  // nullopt if irregular
  bool has_triangle() const;

  // |E(X)|: edges with both ends in x.
  int edges_within(VertexSet x) const;
  // d_G(X) = |nabla(X)|. Rejects empty X and X = V.
  int boundary_size(VertexSet x) const;

  bool is_connected(VertexSet removed = 0) const;
  // Whether the subgraph induced on s (nonempty) is connected.
  bool is_subset_connected(VertexSet s) const;
  // Components of G - removed, each a mask over the original labels,
  // ordered by their lowest vertex.
  std::vector<VertexSet> components(VertexSet removed = 0) const;
  // c0(G - x): number of odd-order components after deleting x.
  int odd_component_count(VertexSet x) const;

  // nullopt means acyclic (infinite girth).
  std::optional<int> girth() const;
  // nullopt means bipartite (no odd cycle).
  std::optional<int> odd_girth() const;
  bool is_bipartite() const;

  // Subgraph induced on `keep`, relabeled to 0..|keep|-1 in ascending
  // order of the original labels.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  Graph(int n) : n_(n), adj_(n, 0), edge_count_(0) {}
  void add_edge(int u, int v);

  int n_;
  std::vector<VertexSet> adj_;
  int edge_count_;
};

// Vertices of a mask in ascending order.
std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(std::span<const int> vs);

}  // namespace vtcrit
