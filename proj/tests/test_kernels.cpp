#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vtcrit/kernels.hpp"
#include "vtcrit/matching.hpp"
#include "vtcrit/ref.hpp"

using namespace vtcrit;
using namespace vtcrit::kernels;

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

TEST_CASE("binomial") {
  CHECK(binomial(10, 4) == 210);
  CHECK(binomial(16, 4) == 1820);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(64, 32) == std::numeric_limits<std::uint64_t>::max());  // saturates
}

TEST_CASE("combination enumeration and unranking agree") {
  for (int n : {5, 8, 11})
    for (int p : {0, 1, 2, 3}) {
      if (p > n) continue;
      std::uint64_t total = binomial(n, p);
      VertexSet m = first_combination(p);
      for (std::uint64_t r = 0; r < total; ++r) {
        CHECK(combination_from_rank(r, n, p) == m);
        if (r + 1 < total) m = next_combination(m);
      }
    }
}

TEST_CASE("combination sweep serial equals parallel") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + trial % 7;
    auto g = random_graph(rng, n, 0.35 + 0.08 * (trial % 5));
    for (int p : {2, 3, 4}) {
      if ((n - p) % 2 != 0 || p > n) continue;
      auto pred = [&](VertexSet s) { return has_perfect_matching(g, s); };
      auto serial = sweep_combinations_serial(n, p, kDefaultBudget, pred);
      for (int jobs : {2, 4}) {
        auto par = sweep_combinations_parallel(n, p, kDefaultBudget, jobs, pred);
        CHECK(par.status == serial.status);
        CHECK(par.first_failing == serial.first_failing);
        CHECK(par.total == serial.total);
      }
    }
  }
}

TEST_CASE("sweep budget guard") {
  auto g = Graph::named("K8");
  auto pred = [&](VertexSet) { return true; };
  auto res = sweep_combinations_serial(8, 4, 10, pred);
  CHECK(res.status == SweepStatus::budget_exceeded);
  CHECK(res.total == 70);
  auto par = sweep_combinations_parallel(8, 4, 10, 4, pred);
  CHECK(par.status == SweepStatus::budget_exceeded);
  (void)g;
}

TEST_CASE("boundary sweep serial equals parallel") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, 5 + trial % 8, 0.4);
    auto serial = min_boundary_by_size_serial(g);
    for (int jobs : {2, 4})
      CHECK(min_boundary_by_size_parallel(g, jobs) == serial);
  }
}

TEST_CASE("fragment sweep serial equals parallel and brute force") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + trial % 8;
    auto g = random_graph(rng, n, 0.35);
    for (int s = 1; s <= 3 && 2 * s <= n; ++s) {
      auto serial = fragment_sweep_serial(g, s);
      auto par = fragment_sweep_parallel(g, s, 3);
      CHECK(serial.exists == par.exists);
      if (serial.exists) {
        CHECK(serial.lambda == par.lambda);
        CHECK(serial.atom_size == par.atom_size);
        CHECK(serial.atoms == par.atoms);
        CHECK(serial.lambda == ref::lambda_s(g, s));
      }
    }
  }
}

TEST_CASE("lambda_1 sweep equals edge connectivity of connected graphs") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, 4 + trial % 7, 0.5);
    if (!g.is_connected()) continue;
    auto sweep = fragment_sweep_serial(g, 1);
    REQUIRE(sweep.exists);
    CHECK(sweep.lambda == ref::edge_connectivity(g));
  }
}
