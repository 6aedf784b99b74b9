#include <doctest.h>

#include <random>

#include "lapbound/spectral.hpp"
#include "oracles.hpp"

using namespace lapbound;

TEST_SUITE("spectral") {
  TEST_CASE("paw characteristic polynomial and spectrum") {
    const Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const LaplacianMatrix l = laplacian(paw);
    CHECK(to_string(char_poly(l)) == "x^4 - 8x^3 + 19x^2 - 12x");
    const Spectrum s = eigenvalues_float(l);
    CHECK(s.values[0] == doctest::Approx(4).epsilon(1e-12));
    CHECK(s.values[3] == doctest::Approx(0).epsilon(1e-12));
    CHECK(s.exact_roots == std::vector<std::pair<long, int>>{{0, 1}, {1, 1}, {3, 1}, {4, 1}});
    CHECK(mu_equals(l, 3, Integer(1)));
    CHECK_FALSE(mu_equals(l, 3, Integer(2)));
    CHECK(count_eigs(l, Rational(3), true) == 1);
    CHECK(count_eigs(l, Rational(3), false) == 2);
  }

  TEST_CASE("char poly matches cofactor-expansion interpolation") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_graph(rng, 1 + trial % 8, 0.5);
      const IntMatrix m = laplacian(g).matrix();
      CHECK(to_rational(char_poly(m)) == oracle::interpolated_char_poly(m));
    }
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m(5);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m(i, j) = entry(rng);
      CHECK(to_rational(char_poly(m)) == oracle::interpolated_char_poly(m));
      RatMatrix r = m.cast<Rational>();
      CHECK(char_poly(r) == oracle::interpolated_char_poly(m));
    }
  }

  TEST_CASE("Bareiss and det_shift match cofactor expansion") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + trial % 7;
      DenseMatrix<Integer> m(n);
      std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          // Sparse rows exercise the pivot search.
          const long v = (trial % 3 == 0 && entry(rng) > 1) ? 0 : entry(rng);
          m(i, j) = v;
          rows[i][j] = v;
        }
      CHECK(bareiss_determinant(m) == oracle::laplace_det(rows));
    }
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
      const LaplacianMatrix l = laplacian(g);
      const CharPoly p = char_poly(l);
      for (long t = -1; t <= g.order() + 1; ++t) CHECK(p.evaluate(Integer(t)) == det_shift(l, Integer(t)));
    }
  }

  TEST_CASE("Jacobi matches Eigen") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_graph(rng, 1 + trial % 16, 0.3 + 0.1 * (trial % 5));
      const RealMatrix m = laplacian(g).matrix().cast<double>();
      const auto ours = jacobi_eigenvalues(m);
      const auto ref = oracle::eigen_eigenvalues(m);
      REQUIRE(ours.size() == ref.size());
      for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-9);
    }
  }

  TEST_CASE("exact counts and multiplicities match rank and Eigen oracles") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
      const LaplacianMatrix l = laplacian(g);
      const ExactSpectrum exact(l);
      const auto ref = oracle::eigen_eigenvalues(l.matrix().cast<double>());
      for (int t = 0; t <= g.order(); ++t) {
        CHECK(exact.multiplicity(Rational(t)) == oracle::nullity(l.matrix(), Rational(t)));
        long above = 0, near = 0;
        for (double x : ref) {
          above += x > t + 1e-6;
          near += std::abs(x - t) <= 1e-6;
        }
        CHECK(exact.count_above(Rational(t)) == above);
        CHECK(exact.count_at_least(Rational(t)) == above + near);
      }
      for (int m = 1; m <= g.order(); ++m) {
        const double mu = ref[m - 1];
        const long k = std::lround(mu);
        if (std::abs(mu - k) < 1e-6) {
          CHECK(exact.compare_mu(m, Rational(k)) == 0);
          CHECK(exact.compare_mu(m, Rational(k + 1)) == -1);
        }
      }
    }
  }

  TEST_CASE("edge deletion interlaces") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_graph(rng, 6, 0.6);
      if (g.edge_count() == 0) continue;
      const Edge e = g.edges().front();
      const auto mu = jacobi_eigenvalues(laplacian(g).matrix().cast<double>());
      const auto nu = jacobi_eigenvalues(laplacian(delete_edge(g, e.first, e.second)).matrix().cast<double>());
      for (std::size_t i = 0; i < mu.size(); ++i) {
        CHECK(nu[i] <= mu[i] + 1e-9);
        if (i + 1 < mu.size()) CHECK(mu[i + 1] <= nu[i] + 1e-9);
      }
    }
  }

  TEST_CASE("principal submatrix splits into induced Laplacian plus outside degrees") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
    const LaplacianMatrix l = laplacian(g);
    const PrincipalSubmatrix s = principal_submatrix(l, 0b01011);
    CHECK(s.vertices == std::vector<int>{0, 1, 3});
    CHECK(s.outside_degree == std::vector<long>{1, 1, 2});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(s.block(i, j) == s.induced(i, j) + (i == j ? s.outside_degree[i] : 0));
  }

  TEST_CASE("quotient matrix") {
    // K_{2,3}: hubs vs leaves is equitable.
    const Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    const LaplacianMatrix l = laplacian(k23);
    const QuotientMatrix q = quotient_matrix(l, {{0, 1}, {2, 3, 4}});
    CHECK(q.entries(0, 0) == 3);
    CHECK(q.entries(0, 1) == -3);
    CHECK(q.entries(1, 0) == -2);
    CHECK(q.entries(1, 1) == 2);
    const auto theta = jacobi_eigenvalues(q.symmetrized());
    CHECK(theta[0] == doctest::Approx(5));
    CHECK(std::abs(theta[1]) < 1e-12);
    CHECK_THROWS_AS(quotient_matrix(l, {{0, 1}, {1, 2, 3, 4}}), Error);
    CHECK_THROWS_AS(quotient_matrix(l, {{0, 1}, {2, 3}}), Error);
    CHECK_THROWS_AS(quotient_matrix(l, {{0, 1, 2, 3, 4}, {}}), Error);
    CHECK_THROWS_AS(quotient_matrix(l, {{0, 1, 2, 3, 7}}), Error);
    try {
      (void)quotient_matrix(l, {{0}, {0, 1, 2, 3, 4}});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidPartition);
    }
  }

  TEST_CASE("argument errors") {
    const LaplacianMatrix l = laplacian(complete_graph(3));
    CHECK_THROWS_AS(mu_equals(l, 0, Integer(0)), Error);
    CHECK_THROWS_AS(mu_equals(l, 4, Integer(0)), Error);
    CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), Error);
    CHECK_THROWS_AS(ExactSpectrum(laplacian(Graph(0))), Error);
    CHECK(count_eigs(laplacian(Graph(0)), Rational(0), false) == 0);
  }
}
