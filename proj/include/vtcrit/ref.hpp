#pragma once

#include <cstdint>
#include <optional>

#include "vtcrit/graph.hpp"

// Independent brute-force reference implementations. Nothing in the main
// library calls these; tests, the acceptance suite and the benchmark use
// them as oracles against the production paths.
namespace vtcrit::ref {

// Maximum matching size by branching on the lowest active vertex.
int matching_number(const Graph& g, VertexSet removed = 0);

// max over all X of c0(G-X) - |X|, scanning all 2^n subsets.
int max_deficiency(const Graph& g);
VertexSet max_deficiency_witness(const Graph& g);  // lowest maximizing mask

// p-factor-criticality through the deficiency characterization:
// c0(G-X) <= |X| - p for every X with |X| >= p.
bool p_factor_critical(const Graph& g, int p);

int edge_connectivity(const Graph& g);    // min d(X) over all proper X
int vertex_connectivity(const Graph& g);  // min disconnecting subset
int tau(const Graph& g);

std::optional<int> lambda_s(const Graph& g, int s);

int independence_number(const Graph& g);

std::uint64_t automorphism_count(const Graph& g);  // n! filter, n <= 8

std::optional<int> girth(const Graph& g);      // simple-cycle enumeration
std::optional<int> odd_girth(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);  // n <= 8

}  // namespace vtcrit::ref
