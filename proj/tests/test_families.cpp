#include <doctest.h>

#include "lapbound/analysis.hpp"
#include "lapbound/canonical.hpp"
#include "lapbound/families.hpp"
#include "lapbound/spectral.hpp"

using namespace lapbound;

namespace {

bool has(const std::vector<FamilySpec>& specs, const FamilySpec& s) {
  return std::find(specs.begin(), specs.end(), s) != specs.end();
}

std::vector<FamilySpec> all_specs_up_to(int n_max) {
  std::vector<FamilySpec> out;
  for (int m = 1; m <= n_max; ++m)
    for (int p = 1; m + p <= n_max; ++p) out.push_back(FamilySpec::pendant_one(m, p));
  for (int m = 2; m <= n_max; ++m)
    for (int e = 1; m * (e + 1) <= n_max; ++e) out.push_back(FamilySpec::pendant_all(m, e));
  for (int d = 2; d + 2 <= n_max; ++d) out.push_back(FamilySpec::complete_bipartite_2d(d));
  for (int s = 0; s <= n_max; ++s)
    for (int t = 1; s + 2 * t <= n_max; ++t)
      for (int x = 0; s + 2 * t + x <= n_max; ++x) out.push_back(FamilySpec::complement_family(s, t, x));
  for (int x = 0; x + 4 <= n_max; ++x) out.push_back(FamilySpec::two_k2(x));
  for (int n = 1; n <= n_max; ++n) out.push_back(FamilySpec::empty(n));
  for (int c = 1; c <= n_max; ++c)
    for (int d = 1; 2 + d + 2 * c <= n_max; ++d) out.push_back(FamilySpec::k2d_pendants_both(c, d));
  for (int d = 2; d + 3 <= n_max; ++d) out.push_back(FamilySpec::k2d_pendant_one(d));
  return out;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("generators follow the labeling convention") {
    const Graph g = generate(FamilySpec::pendant_one(7, 3));
    CHECK(g.order() == 10);
    CHECK(g.degree(0) == 9);
    for (int v = 7; v < 10; ++v) CHECK(g.neighbors(v) == singleton(0));
    const Graph h = generate(FamilySpec::pendant_all(6, 2));
    CHECK(h.order() == 18);
    CHECK(h.edge_count() == 15 + 12);
    CHECK(h.neighbors(6) == singleton(0));
    CHECK(h.neighbors(8) == singleton(1));
    const Graph k24 = generate(FamilySpec::complete_bipartite_2d(4));
    CHECK(degree_sequence(k24) == std::vector<int>{4, 4, 2, 2, 2, 2});
    CHECK_FALSE(k24.adjacent(0, 1));
  }

  TEST_CASE("complement family examples") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(are_isomorphic(generate_complement_family(1, 1, 0), p3));
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(are_isomorphic(generate_complement_family(0, 2, 0), c4));
    CHECK(generate_complement_family(0, 1, 0) == Graph(2));
    CHECK(generate_complement_family(1, 1, 2).order() == 5);
  }

  TEST_CASE("recognize examples") {
    const Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(recognize(paw) == std::vector<FamilySpec>{FamilySpec::pendant_one(3, 1)});
    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(recognize(p4) == std::vector<FamilySpec>{FamilySpec::pendant_all(2, 1)});
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto c4_specs = recognize(c4);
    CHECK(c4_specs.size() == 2);
    CHECK(has(c4_specs, FamilySpec::complete_bipartite_2d(2)));
    CHECK(has(c4_specs, FamilySpec::complement_family(0, 2, 0)));
    const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(has(recognize(star), FamilySpec::pendant_one(1, 4)));
    CHECK(has(recognize(star), FamilySpec::pendant_one(2, 3)));
    CHECK(recognize(complete_graph(4)).empty());
    CHECK(has(recognize(Graph(5)), FamilySpec::empty(5)));
  }

  TEST_CASE("round trip: recognize(generate(spec)) contains spec up to 12 vertices") {
    for (const FamilySpec& spec : all_specs_up_to(12)) {
      INFO(describe(spec));
      CHECK(has(recognize(generate(spec)), spec));
      // Relabeling does not matter to the structural recognizers.
      const Graph g = generate(spec);
      std::vector<int> rev(static_cast<std::size_t>(g.order()));
      for (int v = 0; v < g.order(); ++v) rev[v] = g.order() - 1 - v;
      CHECK(has(recognize(permute(g, rev)), spec));
    }
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(FamilySpec::pendant_one(3, 0)), Error);
    CHECK_NOTHROW(validate(FamilySpec::pendant_one(3, 0), true));
    CHECK_THROWS_AS(validate(FamilySpec::pendant_all(1, 2)), Error);
    CHECK_THROWS_AS(validate(FamilySpec::complete_bipartite_2d(1)), Error);
    CHECK_THROWS_AS(validate(FamilySpec::complement_family(1, 0, 0)), Error);
    CHECK_NOTHROW(validate(FamilySpec::pendant_all(8, 3)));
    CHECK_THROWS_AS(validate(FamilySpec::pendant_all(9, 3)), Error);
    CHECK_THROWS_AS(generate(FamilySpec::pendant_one(30, 3)), Error);
    CHECK_THROWS_AS(make_spec(FamilyTag::PendantOne, {3}), Error);
    CHECK(make_spec(FamilyTag::PendantOne, {7, 3}) == FamilySpec::pendant_one(7, 3));
    CHECK(family_tag_from_string("CompleteBipartite2d") == FamilyTag::CompleteBipartite2d);
    CHECK_FALSE(family_tag_from_string("bogus").has_value());
    CHECK(describe(FamilySpec::pendant_one(7, 3)) == "PendantOne(m=7, p=3)");
  }

  TEST_CASE("equality witnesses") {
    for (int m = 2; m <= 9; ++m)
      for (int p = 1; m + p <= 10; ++p)
        CHECK(mu_equals(laplacian(generate(FamilySpec::pendant_one(m, p))), m, Integer(1)));
    for (int m = 2; m <= 6; ++m)
      for (int e = 1; m * (e + 1) <= 12; ++e)
        CHECK(mu_equals(laplacian(generate(FamilySpec::pendant_all(m, e))), m, Integer(e + 1)));
    for (int d = 2; d <= 8; ++d)
      CHECK(mu_equals(laplacian(generate(FamilySpec::complete_bipartite_2d(d))), 2, Integer(d)));
    for (int s = 0; s <= 9; ++s)
      for (int t = 1; s + 2 * t <= 9; ++t)
        for (int x = 0; s + 2 * t + x <= 9; ++x) {
          const Graph g = generate_complement_family(s, t, x);
          const int m = s + 2 * t;
          CHECK(degree_sequence(g)[m - 1] - m + 2 == 0);
          CHECK(mu_equals(laplacian(g), m, Integer(0)));
        }
  }

  TEST_CASE("degenerate members fail the equality") {
    for (int m = 2; m <= 8; ++m) {
      CHECK_FALSE(mu_equals(laplacian(generate(FamilySpec::pendant_one(m, 0))), m, Integer(1)));
      CHECK_FALSE(mu_equals(laplacian(generate(FamilySpec::pendant_all(m, 0))), m, Integer(1)));
    }
  }
}
