#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vtcrit/matching.hpp"
#include "vtcrit/connectivity.hpp"
#include "vtcrit/ref.hpp"

using namespace vtcrit;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

bool matching_is_valid(const Graph& g, const Matching& m) {
  VertexSet seen = 0;
  for (auto [u, v] : m.pairs) {
    if (!g.has_edge(u, v)) return false;
    if (contains(seen, u) || contains(seen, v)) return false;
    seen |= bit(u) | bit(v);
  }
  return seen == m.covered;
}

// Theorem-5 postconditions plus the perfect-matching criterion.
void check_ge(const Graph& g, const GEDecomposition& dec) {
  // Components of G - x, all factor-critical.
  auto comps = g.components(dec.x);
  REQUIRE(comps == dec.components);
  for (VertexSet comp : dec.components) CHECK(is_factor_critical(g.induced(comp)));
  // matching_into: injective on components, total on x, realized by edges.
  VertexSet xs_seen = 0;
  std::vector<bool> comp_used(dec.components.size(), false);
  for (auto [xv, ci] : dec.matching_into) {
    CHECK(contains(dec.x, xv));
    CHECK_FALSE(contains(xs_seen, xv));
    xs_seen |= bit(xv);
    REQUIRE(ci < static_cast<int>(dec.components.size()));
    CHECK_FALSE(comp_used[ci]);
    comp_used[ci] = true;
    CHECK((g.neighbors(xv) & dec.components[ci]) != 0);
  }
  CHECK(xs_seen == dec.x);
  CHECK((popcount(dec.x) == static_cast<int>(dec.components.size())) ==
        has_perfect_matching(g));
}

}  // namespace

TEST_CASE("maximum matching on fixtures") {
  CHECK(matching_number(Graph::named("C7")) == 3);
  CHECK(matching_number(Graph::named("petersen")) == 5);
  CHECK(has_perfect_matching(Graph::named("petersen")));
  CHECK(matching_number(Graph::circulant(6, {1})) == 3);
  CHECK(has_perfect_matching(Graph::named("K6")));
  CHECK_FALSE(has_perfect_matching(Graph::named("C7")));
  CHECK_FALSE(has_perfect_matching(Graph::named("K1,3")));
  auto m = maximum_matching(Graph::named("petersen"));
  CHECK(matching_is_valid(Graph::named("petersen"), m));
  CHECK(m.size() == 5);
}

TEST_CASE("blossom agrees with brute force on 220 random graphs") {
  std::mt19937 rng(20240613);
  for (int trial = 0; trial < 220; ++trial) {
    int n = 2 + trial % 9;  // up to 10
    auto g = random_graph(rng, n, 0.15 + 0.1 * (trial % 7));
    int nu = matching_number(g);
    CHECK(nu == ref::matching_number(g));
    auto m = maximum_matching(g);
    CHECK(matching_is_valid(g, m));
    CHECK(m.size() == nu);
  }
}

TEST_CASE("deficiency and Berge witness") {
  CHECK(deficiency(Graph::named("C7")) == 1);
  CHECK(deficiency(Graph::named("K6")) == 0);
  auto k13 = Graph::named("K1,3");
  CHECK(deficiency(k13) == 2);
  CHECK(berge_witness(k13) == bit(0));  // the center
  CHECK(berge_witness(Graph::named("C7")) == 0);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 9;
    auto g = random_graph(rng, n, 0.3 + 0.07 * (trial % 6));
    int def = deficiency(g);
    CHECK(def == ref::max_deficiency(g));
    VertexSet w = berge_witness(g);
    CHECK(g.odd_component_count(w) - popcount(w) == def);
  }
}

TEST_CASE("p-factor-criticality on fixtures") {
  CHECK(is_p_factor_critical(Graph::named("K6"), 4).critical());
  CHECK(is_p_factor_critical(Graph::named("petersen"), 2).critical());
  auto res = is_p_factor_critical(Graph::circulant(10, {1, 2}), 4);
  CHECK_FALSE(res.critical());
  REQUIRE(res.witness.has_value());
}

TEST_CASE("p-factor-criticality witness invariant") {
  auto g = Graph::circulant(10, {1, 2});
  auto res = is_p_factor_critical(g, 4);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->odd_components == g.odd_component_count(res.witness->x));
  CHECK(res.witness->odd_components > popcount(res.witness->x) - 4);
  CHECK(popcount(*res.failing_set) == 4);
  CHECK_FALSE(has_perfect_matching(g, *res.failing_set));
}

TEST_CASE("parity handling") {
  CHECK_THROWS_AS(is_p_factor_critical(Graph::named("K6"), 3), std::invalid_argument);
  CHECK_THROWS_AS(is_p_factor_critical(Graph::named("C7"), 2), std::invalid_argument);
  CHECK_FALSE(is_factor_critical(Graph::named("K6")));  // wrong parity: false
  CHECK_FALSE(is_bicritical(Graph::named("C7")));
}

TEST_CASE("factor-critical and bicritical fixtures") {
  CHECK(is_factor_critical(Graph::named("C5")));
  CHECK(is_factor_critical(Graph::named("C7")));
  CHECK(is_bicritical(Graph::named("petersen")));
  CHECK_FALSE(is_bicritical(Graph::circulant(6, {1})));  // bipartite C6
  CHECK(is_factor_critical(Graph::named("K7")));
  CHECK(is_bicritical(Graph::named("K6")));
}

TEST_CASE("Tutte-Berge equivalence for p-factor-criticality") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 4 + trial % 7;  // up to 10
    auto g = random_graph(rng, n, 0.35 + 0.08 * (trial % 5));
    for (int p = 1; p <= 4 && p <= n; ++p) {
      if ((n - p) % 2 != 0) continue;
      CHECK(is_p_factor_critical(g, p).critical() == ref::p_factor_critical(g, p));
    }
  }
}

TEST_CASE("theorem 4: criticality forces connectivity") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + trial % 7;
    auto g = random_graph(rng, n, 0.5);
    for (int p = 1; p <= 4 && p < n; ++p) {
      if ((n - p) % 2 != 0) continue;
      if (!is_p_factor_critical(g, p).critical()) continue;
      ++checked;
      CHECK(vertex_connectivity(g) >= p);
      CHECK(edge_connectivity(g) >= p + 1);
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("q-extendability") {
  CHECK(is_q_extendable(Graph::named("K6"), 2).extendable());
  auto c6 = Graph::circulant(6, {1});
  CHECK(is_q_extendable(c6, 1).extendable());
  auto res = is_q_extendable(c6, 2);
  CHECK_FALSE(res.extendable());
  CHECK(res.blocking.size() == 2);
  CHECK(is_q_extendable(Graph::circulant(8, {1, 2, 4}), 2).extendable());

  CHECK_THROWS_AS(is_q_extendable(Graph::named("C7"), 1), std::invalid_argument);
  CHECK_THROWS_AS(is_q_extendable(Graph::named("K6"), 3), std::invalid_argument);
}

TEST_CASE("elementary graphs") {
  CHECK(is_elementary(Graph::circulant(6, {1})));
  CHECK(is_elementary(Graph::named("K3,3")));
  auto two_k2 = Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK_FALSE(is_elementary(two_k2));
  CHECK_THROWS_AS(is_elementary(Graph::named("C7")), std::invalid_argument);
  // No perfect matching: false, not an error.
  CHECK_FALSE(is_elementary(Graph::named("K1,3")));
}

TEST_CASE("gallai-edmonds postconditions on fixtures") {
  auto k13 = Graph::named("K1,3");
  auto dec = gallai_edmonds(k13);
  CHECK(dec.x == bit(0));
  CHECK(dec.components.size() == 3);
  check_ge(k13, dec);

  auto c7 = Graph::named("C7");
  auto dec7 = gallai_edmonds(c7);
  CHECK(dec7.x == 0);
  CHECK(dec7.components.size() == 1);
  check_ge(c7, dec7);

  check_ge(Graph::named("K6"), gallai_edmonds(Graph::named("K6")));
  check_ge(Graph::named("petersen"), gallai_edmonds(Graph::named("petersen")));

  // Theta graph (2,2,4): no single-vertex step works at the start, so the
  // growth loop must take a composite step.
  auto theta = Graph::from_edge_list(
      7, std::vector<std::pair<int, int>>{
             {0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 6}, {6, 1}});
  CHECK(deficiency(theta) == 1);
  CHECK_FALSE(is_factor_critical(theta));
  check_ge(theta, gallai_edmonds(theta));
}

TEST_CASE("gallai-edmonds postconditions on random graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + trial % 10;
    auto g = random_graph(rng, n, 0.3 + 0.08 * (trial % 6));
    check_ge(g, gallai_edmonds(g));
  }
}

TEST_CASE("no-4fc witness") {
  auto c10 = Graph::circulant(10, {1, 2});
  REQUIRE(is_bicritical(c10));
  auto w = find_no4fc_witness(c10);
  REQUIRE(w.has_value());
  CHECK(popcount(w->x) >= 4);
  CHECK(c10.odd_component_count(w->x) == popcount(w->x) - 2);
  for (VertexSet comp : w->components) CHECK(is_factor_critical(c10.induced(comp)));

  CHECK_FALSE(find_no4fc_witness(Graph::named("K6")).has_value());

  auto c12 = Graph::circulant(12, {1, 2});
  REQUIRE(is_bicritical(c12));
  auto w12 = find_no4fc_witness(c12);
  REQUIRE(w12.has_value());
  CHECK(c12.odd_component_count(w12->x) == popcount(w12->x) - 2);

  CHECK_THROWS_AS(find_no4fc_witness(Graph::circulant(6, {1})), std::invalid_argument);
}
