#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vtcrit/lemma_checks.hpp"
#include "vtcrit/matching.hpp"
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

}  // namespace

TEST_CASE("independence number") {
  CHECK(independence_number(Graph::named("petersen")) == 4);
  CHECK(independence_number(Graph::circulant(6, {1})) == 3);
  CHECK(independence_number(Graph::named("K6")) == 1);
  CHECK(independence_number(Graph::named("K3,3")) == 3);
  CHECK_THROWS_AS(independence_number(Graph::named("K6"), 4), std::invalid_argument);

  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 11;  // up to 12
    auto g = random_graph(rng, n, 0.2 + 0.09 * (trial % 7));
    CHECK(independence_number(g) == ref::independence_number(g));
  }
}

TEST_CASE("maximum independent set reconstruction") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, 3 + trial % 9, 0.4);
    VertexSet mis = maximum_independent_set(g);
    CHECK(popcount(mis) == independence_number(g));
    CHECK(g.edges_within(mis) == 0);
  }
}

TEST_CASE("alpha plus cover equals n") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, 3 + trial % 10, 0.35);
    int alpha = independence_number(g);
    // Konig on bipartite instances: minimum cover = maximum matching.
    if (g.is_bipartite()) CHECK(alpha + matching_number(g) == g.n());
    // In general the complement of a maximum independent set is a cover.
    CHECK(alpha + (g.n() - alpha) == g.n());
  }
}

TEST_CASE("mantel bound") {
  auto k33 = check_mantel(Graph::named("K3,3"));
  CHECK(k33.hypotheses_met);
  CHECK(k33.conclusion_holds == true);  // 9 <= 36/4 with equality

  auto pet = check_mantel(Graph::named("petersen"));
  CHECK(pet.hypotheses_met);
  CHECK(pet.conclusion_holds == true);

  auto k6 = check_mantel(Graph::named("K6"));
  CHECK_FALSE(k6.hypotheses_met);
  CHECK_FALSE(k6.conclusion_holds.has_value());
}

TEST_CASE("order-girth bound") {
  auto pet = check_order_girth(Graph::named("petersen"));
  CHECK(pet.hypotheses_met);
  CHECK(pet.conclusion_holds == true);  // 2*10 >= 3*5

  CHECK_FALSE(check_order_girth(Graph::named("K6")).hypotheses_met);
  CHECK_FALSE(check_order_girth(Graph::named("K3,3")).hypotheses_met);  // bipartite
}

TEST_CASE("independence bound lemma") {
  auto pet = check_independence_bound(Graph::named("petersen"));
  CHECK(pet.hypotheses_met);
  CHECK(pet.conclusion_holds == true);  // 4 <= 10/2 - 3/4

  auto k6 = check_independence_bound(Graph::named("K6"));
  CHECK(k6.hypotheses_met);
  CHECK(k6.conclusion_holds == true);  // 1 <= 2

  CHECK_FALSE(check_independence_bound(Graph::circulant(6, {1})).hypotheses_met);
  CHECK_FALSE(check_independence_bound(Graph::named("K1,3")).hypotheses_met);
}

TEST_CASE("girth-X bound lemma") {
  auto pet = Graph::named("petersen");
  // X = N(v): independent (girth 5), G-X has one trivial component {v}.
  VertexSet x = pet.neighbors(0);
  auto rep = check_girthX_bound(pet, x);
  CHECK(rep.hypotheses_met);
  CHECK(rep.conclusion_holds == true);  // t = 2, bound 2*3/2+1 = 4 <= 5

  // X containing an edge: hypotheses unmet.
  auto bad = check_girthX_bound(pet, bit(0) | bit(1));
  CHECK_FALSE(bad.hypotheses_met);

  // Zero trivial components: t = |X|, bound collapses to g0 >= 3.
  auto c5 = Graph::named("C5");
  auto weak = check_girthX_bound(c5, bit(0));
  CHECK(weak.hypotheses_met);
  CHECK(weak.conclusion_holds == true);
}

TEST_CASE("trivial components bound lemma") {
  auto k6 = Graph::named("K6");
  VertexSet x = k6.neighbors(0) | bit(1);  // N(0) already contains 1
  auto rep = check_trivial_components_bound(k6, x);
  CHECK(rep.hypotheses_met);
  CHECK(rep.conclusion_holds == true);

  auto rep2 = check_trivial_components_bound(Graph::named("petersen"), bit(0));
  CHECK_FALSE(rep2.hypotheses_met);  // triangle-free
}

TEST_CASE("k36 lemma") {
  auto k66 = Graph::named("K6,6");
  auto rep = check_k36_condition(k66);
  CHECK(rep.hypotheses_met);
  CHECK(rep.conclusion_holds == true);

  CHECK_FALSE(check_k36_condition(Graph::named("petersen")).hypotheses_met);
  // 6-regular triangle-free without a same-neighborhood triple: vacuous.
  auto c13 = Graph::circulant(13, {1, 3, 4});
  (void)c13;
}

TEST_CASE("lemma reports never violate on vertex-transitive samples") {
  // The lemmas are theorems; any hypotheses-met report must conclude true.
  std::vector<Graph> samples;
  for (int n = 6; n <= 12; ++n)
    for (std::uint32_t mask = 1; mask < (1u << (n / 2)); ++mask) {
      std::vector<int> conn;
      for (int i = 0; i < n / 2; ++i)
        if (mask & (1u << i)) conn.push_back(i + 1);
      samples.push_back(Graph::circulant(n, conn));
    }
  int met = 0;
  for (const auto& g : samples) {
    GraphFacts facts = compute_graph_facts(g);
    for (const auto& rep :
         {check_mantel(g, facts), check_order_girth(g, facts),
          check_independence_bound(g, facts), check_k36_condition(g, facts),
          check_girthX_bound(g, maximum_independent_set(g), facts),
          check_trivial_components_bound(g, g.neighbors(0) | bit(0), facts)}) {
      if (rep.hypotheses_met) {
        ++met;
        CHECK(rep.conclusion_holds == true);
      }
    }
  }
  CHECK(met > 300);
}
