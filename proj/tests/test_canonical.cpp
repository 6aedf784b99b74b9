#include <doctest.h>

#include <random>
#include <set>

#include "lapbound/canonical.hpp"
#include "lapbound/graph6.hpp"
#include "oracles.hpp"

using namespace lapbound;

TEST_SUITE("canonical") {
  TEST_CASE("form is invariant under 200 random relabelings") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 14;
      const Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
      const Graph h = permute(g, oracle::random_permutation(rng, n));
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(canonical_graph(g) == canonical_graph(h));
      CHECK(are_isomorphic(g, h));
    }
  }

  TEST_CASE("labeling is a permutation giving the canonical graph") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_graph(rng, 9, 0.45);
      const auto perm = canonical_labeling(g);
      std::vector<int> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < 9; ++i) CHECK(sorted[i] == i);
      CHECK(permute(g, perm) == canonical_graph(g));
      CHECK(canonical_form(g).bytes == write_graph6(canonical_graph(g)));
    }
  }

  TEST_CASE("agrees with brute-force isomorphism on random small pairs") {
    std::mt19937_64 rng(99);
    int iso = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 2 + trial % 5;
      const Graph g = oracle::random_graph(rng, n, 0.5);
      const Graph h = oracle::random_graph(rng, n, 0.5);
      const bool expected = oracle::brute_canonical(g) == oracle::brute_canonical(h);
      iso += expected;
      CHECK(are_isomorphic(g, h) == expected);
      CHECK((canonical_form(g) == canonical_form(h)) == expected);
    }
    CHECK(iso > 20);
  }

  TEST_CASE("highly symmetric graphs") {
    // Petersen graph: complement of the line graph of K5.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) {
        auto [a, b] = pairs[i];
        auto [c, d] = pairs[j];
        if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
      }
    const Graph petersen = Graph::from_edges(10, edges);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; ++k)
      CHECK(canonical_form(permute(petersen, oracle::random_permutation(rng, 10))) == canonical_form(petersen));
    // Same degree sequence, not isomorphic: C6 versus two triangles.
    const Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    const Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK_FALSE(are_isomorphic(c6, two_k3));
    CHECK(canonical_form(complete_graph(20)) == canonical_form(permute(complete_graph(20), oracle::random_permutation(rng, 20))));
    CHECK(canonical_form(Graph(0)).bytes == "?");
  }
}
