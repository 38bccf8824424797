#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "vtcrit/graph.hpp"
#include "vtcrit/group.hpp"
#include "vtcrit/io.hpp"
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

TEST_CASE("from_edge_list basics") {
  auto k2 = Graph::from_edge_list(2, std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(0, 1));

  auto c5 = Graph::from_edge_list(
      5, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  CHECK_THROWS_AS(Graph::from_edge_list(1, std::vector<std::pair<int, int>>{{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<std::pair<int, int>>{{0, 5}}),
                  std::invalid_argument);
  // Duplicate edges collapse.
  auto dup = Graph::from_edge_list(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("circulant generator") {
  auto c6 = Graph::circulant(6, {1});
  CHECK(c6.regular_degree() == 2);
  CHECK(c6.is_bipartite());

  auto g8 = Graph::circulant(8, {1, 2, 4});
  CHECK(g8.regular_degree() == 5);
  CHECK(g8.has_edge(0, 1));
  CHECK(g8.has_edge(1, 2));
  CHECK(g8.has_edge(0, 2));  // triangle 0-1-2
  CHECK(g8.has_triangle());

  auto c10 = Graph::circulant(10, {1, 2});
  CHECK(c10.regular_degree() == 4);
  CHECK_FALSE(c10.is_bipartite());
  CHECK(ref::odd_girth(c10).has_value());

  CHECK_THROWS_AS(Graph::circulant(6, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::circulant(6, {4}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::circulant(6, {}), std::invalid_argument);
}

TEST_CASE("circulant regularity sweep") {
  for (int n = 4; n <= 12; ++n) {
    int half = n / 2;
    for (std::uint32_t mask = 1; mask < (1u << half); ++mask) {
      std::vector<int> conn;
      for (int i = 0; i < half; ++i)
        if (mask & (1u << i)) conn.push_back(i + 1);
      auto g = Graph::circulant(n, conn);
      CHECK(g.regular_degree().has_value());
    }
  }
}

TEST_CASE("cayley generator") {
  auto z6 = GroupTable::cyclic(6);
  auto c6 = Graph::cayley(z6, {1, 5});
  CHECK(c6.regular_degree() == 2);
  CHECK(c6.is_connected());
  CHECK(c6.girth() == 6);

  // All involutions of d3 (= S3) give K3,3.
  auto d3 = GroupTable::load_file(std::string(VTCRIT_DATA_DIR) + "/groups/o06_d3.txt");
  std::vector<int> transpositions;
  for (int x = 0; x < 6; ++x)
    if (d3.is_involution(x)) transpositions.push_back(x);
  REQUIRE(transpositions.size() == 3);
  auto cay = Graph::cayley(d3, transpositions);
  CHECK(ref::isomorphic(cay, Graph::named("K3,3")));

  // Z8 with the unique involution: a perfect matching on 8 vertices.
  auto z8 = GroupTable::cyclic(8);
  auto pm = Graph::cayley(z8, {4});
  CHECK(pm.regular_degree() == 1);
  CHECK(pm.components().size() == 4);
  CHECK_FALSE(pm.is_connected());

  CHECK_THROWS_AS(Graph::cayley(z6, {0}), std::invalid_argument);       // identity
  CHECK_THROWS_AS(Graph::cayley(z6, {1}), std::invalid_argument);       // not closed
  CHECK_THROWS_AS(Graph::cayley(z6, {1, 5, 2}), std::invalid_argument); // 2 unmatched
}

TEST_CASE("named catalog") {
  auto pet = Graph::named("petersen");
  CHECK(pet.n() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.regular_degree() == 3);

  auto k6 = Graph::named("K6");
  CHECK(k6.n() == 6);
  CHECK(k6.edge_count() == 15);

  auto k33 = Graph::named("K3,3");
  CHECK(k33.n() == 6);
  CHECK(k33.edge_count() == 9);
  CHECK(k33.is_bipartite());

  CHECK(Graph::named("C7").n() == 7);
  CHECK_THROWS_AS(Graph::named("zachary"), std::invalid_argument);
}

TEST_CASE("boundary sizes") {
  auto pet = Graph::named("petersen");
  CHECK(pet.boundary_size(bit(0)) == 3);
  auto c6 = Graph::circulant(6, {1});
  CHECK(c6.boundary_size(bit(0) | bit(1) | bit(2)) == 2);
  auto k6 = Graph::named("K6");
  CHECK(k6.boundary_size(bit(0) | bit(1)) == 8);
  CHECK_THROWS_AS(k6.boundary_size(0), std::invalid_argument);
  CHECK_THROWS_AS(k6.boundary_size(k6.vertices()), std::invalid_argument);
}

TEST_CASE("boundary identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_graph(rng, 4 + trial % 7, 0.45);
    std::uniform_int_distribution<VertexSet> dist(1, g.vertices() - 1);
    VertexSet x = dist(rng);
    if (x == 0 || x == g.vertices()) continue;
    // d(X) = d(complement)
    CHECK(g.boundary_size(x) == g.boundary_size(g.vertices() & ~x));
    // For regular graphs d(X) = k|X| - 2|E(X)|.
    if (auto k = g.regular_degree())
      CHECK(g.boundary_size(x) == *k * popcount(x) - 2 * g.edges_within(x));
  }
  // The regular identity on a circulant, exhaustively.
  auto g = Graph::circulant(10, {1, 2});
  for (VertexSet x = 1; x < g.vertices(); ++x)
    CHECK(g.boundary_size(x) == 4 * popcount(x) - 2 * g.edges_within(x));
}

TEST_CASE("components and odd components") {
  auto c10 = Graph::circulant(10, {1, 2});
  VertexSet nbr = c10.neighbors(0);
  CHECK(c10.odd_component_count(nbr) == 2);  // isolated 0 plus a 5-path

  auto k6 = Graph::named("K6");
  CHECK(k6.odd_component_count(full_set(4)) == 0);

  auto c6 = Graph::circulant(6, {1});
  CHECK(c6.odd_component_count(0) == 0);
  CHECK(c6.components().size() == 1);
}

TEST_CASE("girth and odd girth") {
  auto pet = Graph::named("petersen");
  CHECK(pet.girth() == 5);
  CHECK(pet.odd_girth() == 5);

  auto k33 = Graph::named("K3,3");
  CHECK(k33.girth() == 4);
  CHECK(k33.is_bipartite());
  CHECK_FALSE(k33.odd_girth().has_value());

  auto k6 = Graph::named("K6");
  CHECK(k6.girth() == 3);
  CHECK(k6.odd_girth() == 3);

  // Forest: infinite girth.
  auto path = Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(path.girth().has_value());
  CHECK(path.is_bipartite());
}

TEST_CASE("girth agrees with cycle enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = random_graph(rng, 4 + trial % 6, 0.25 + 0.1 * (trial % 5));
    CHECK(g.girth() == ref::girth(g));
    CHECK(g.odd_girth() == ref::odd_girth(g));
    CHECK(g.is_bipartite() == !g.odd_girth().has_value());
  }
}

TEST_CASE("graph6 round trip") {
  auto c5 = Graph::named("C5");
  CHECK(to_graph6(c5) == "Dhc");
  CHECK(from_graph6("Dhc") == c5);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = random_graph(rng, 1 + trial % 13, 0.4);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);
}

TEST_CASE("edge list format") {
  auto pet = Graph::named("petersen");
  std::stringstream ss;
  write_edge_list(ss, pet);
  auto back = read_edge_list(ss);
  CHECK(back == pet);
  std::stringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("group table validation") {
  // Non-associative Latin square (row/col 0 as identity, rest twisted).
  std::vector<std::vector<int>> bad = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_WITH_AS(GroupTable::from_table(bad), "group table is not associative",
                       std::invalid_argument);

  auto z6 = GroupTable::cyclic(6);
  CHECK(z6.identity() == 0);
  CHECK(z6.inverse(1) == 5);
  CHECK(z6.is_involution(3));
  CHECK(z6.inverse_classes().size() == 3);
}

TEST_CASE("bundled group tables all load") {
  int count = 0;
  namespace fs = std::filesystem;
  for (const auto& entry : fs::directory_iterator(std::string(VTCRIT_DATA_DIR) + "/groups")) {
    if (entry.path().extension() != ".txt") continue;
    CHECK_NOTHROW(GroupTable::load_file(entry.path().string()));
    ++count;
  }
  CHECK(count == 42);
}
