#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vtcrit/graph.hpp"

namespace vtcrit {

using GroupOrder = unsigned __int128;
std::string to_string(GroupOrder x);

struct Permutation {
  std::vector<int> img;

  static Permutation identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int operator()(int v) const { return img[v]; }
  VertexSet apply(VertexSet s) const;
  Permutation compose(const Permutation& inner) const;  // this(inner(v))
  Permutation inverse() const;
  bool is_identity() const;
  bool is_automorphism_of(const Graph& g) const;
  auto operator<=>(const Permutation&) const = default;
};

struct SymmetryOptions {
  int cap_n = 32;                           // largest graph we will search
  std::uint64_t materialize_cap = 1'000'000;  // element enumeration limit
};

// Automorphism group as generators plus the exact order from an
// orbit-stabilizer chain. Every generator is edge-preserving by
// construction (verified when found).
class AutGroup {
 public:
  AutGroup(int n, std::vector<Permutation> gens, GroupOrder order,
           std::uint64_t materialize_cap);

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  GroupOrder order() const { return order_; }
  std::string order_string() const { return to_string(order_); }

  std::vector<VertexSet> vertex_orbits() const;
  bool transitive() const { return vertex_orbits().size() == 1; }
  // Distinct images of x under the group, ascending.
  std::vector<VertexSet> set_orbit(VertexSet x) const;
  // Full element list, or nullptr when the order exceeds the cap.
  const std::vector<Permutation>* elements() const;

 private:
  int n_;
  std::vector<Permutation> gens_;
  GroupOrder order_;
  std::uint64_t materialize_cap_;
  mutable std::optional<std::vector<Permutation>> elements_;
};

AutGroup automorphism_group(const Graph& g, const SymmetryOptions& opts = {});
std::vector<VertexSet> orbits(const Graph& g, const SymmetryOptions& opts = {});
bool is_vertex_transitive(const Graph& g, const SymmetryOptions& opts = {});

struct BlockCheck {
  bool is_block = false;
  // Reported (not assumed) when is_block holds:
  std::optional<bool> size_divides_n;
  std::optional<bool> orbit_partitions_vertices;
  std::vector<VertexSet> orbit;
};

// Whether every automorphism maps x onto itself or clear of it.
// x must be a nonempty proper subset.
BlockCheck is_imprimitive_block(const AutGroup& aut, VertexSet x);
BlockCheck is_imprimitive_block(const Graph& g, VertexSet x,
                                const SymmetryOptions& opts = {});

// For an imprimitive block of a vertex-transitive graph, the induced
// subgraph must again be vertex-transitive; verifies exactly that.
// Throws when the preconditions fail.
bool block_induced_transitivity_check(const Graph& g, VertexSet x,
                                      const SymmetryOptions& opts = {});

struct BlockRuleReport {
  int k = 0;
  // Minimum-boundary / minimum-size selection over ceil((k+1)/3) <= |S| <= n/2.
  bool rule_a_evaluable = false;
  bool rule_a_hypothesis = false;  // d(S) < 2(k+1)^2/9
  int rule_a_boundary = -1, rule_a_size = -1;
  int rule_a_minimizers = 0;
  std::vector<VertexSet> rule_a_failures;  // minimizers that are not blocks
  std::vector<VertexSet> verified_blocks;  // minimizers confirmed as blocks
  // Selection over 1 < |S| <= n/2.
  bool rule_b_evaluable = false;
  bool rule_b_hypothesis = false;  // d(S) < 2(k-1)
  int rule_b_boundary = -1, rule_b_size = -1;
  int rule_b_minimizers = 0;
  std::vector<VertexSet> rule_b_failures;  // minimizers violating d(S)=|S|>=k, deg k-1
};

// Applies the two minimum-boundary selection rules for imprimitive blocks
// and degree structure; every tied minimizer is tested. Requires a
// connected vertex-transitive regular graph.
BlockRuleReport atom_imprimitivity_check(const Graph& g,
                                         const SymmetryOptions& opts = {},
                                         int jobs = 1);

}  // namespace vtcrit
