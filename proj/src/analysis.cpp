#include "lapbound/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lapbound/canonical.hpp"
#include "lapbound/spectral.hpp"

namespace lapbound {

namespace {

void require_nexus_host(const Graph& g, int m) {
  if (m < 1 || m > g.order())
    throw Error(ErrorKind::Precondition, "nexus size " + std::to_string(m) + " out of range");
  if (isolated_vertices(g) != 0)
    throw Error(ErrorKind::Precondition, "m-nexus undefined for graphs with isolated vertices");
}

int degree_threshold(const Graph& g, int m) {
  return degree_sequence(g)[static_cast<std::size_t>(m - 1)];
}

NexusCertificate certify(const Graph& g, int m, VertexSet set) {
  NexusCertificate cert{m, set, 0, {}};
  cert.min_degree_in_set = g.order();
  for (int s : members(set)) {
    cert.min_degree_in_set = std::min(cert.min_degree_in_set, g.degree(s));
    cert.outside_neighbor_counts.push_back(popcount(g.neighbors(s) & ~set));
  }
  return cert;
}

bool covers_all_edges(const Graph& g, VertexSet set) {
  for (int v : members(g.vertices() & ~set))
    if ((g.neighbors(v) & ~set) != 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Below: return "BELOW";
    case Relation::Equal: return "EQUAL";
    case Relation::Above: return "ABOVE";
  }
  return "?";
}

bool is_exception_graph(const Graph& g, int m) {
  if (m < 1 || m > g.order()) return false;
  return are_isomorphic(g, disjoint_union(complete_graph(m), Graph(g.order() - m)));
}

EqualityReport bh_report(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw Error(ErrorKind::Precondition, "report needs at least one vertex");
  const LaplacianMatrix l = laplacian(g);
  const ExactSpectrum exact(l);
  const std::vector<double> mu = jacobi_eigenvalues(l.matrix().cast<double>());
  const std::vector<int> degrees = degree_sequence(g);

  EqualityReport report{n, {}};
  for (int m = 1; m <= n; ++m) {
    EqualityRow row;
    row.m = m;
    row.d_m = degrees[static_cast<std::size_t>(m - 1)];
    row.target = row.d_m - m + 2;
    const int cmp = exact.compare_mu(m, Rational(row.target));
    row.relation = cmp < 0 ? Relation::Below : cmp == 0 ? Relation::Equal : Relation::Above;
    row.mu_float = mu[static_cast<std::size_t>(m - 1)];
    row.exception = is_exception_graph(g, m);
    report.rows.push_back(row);
  }
  return report;
}

bool is_nexus(const Graph& g, VertexSet set) {
  const int m = popcount(set);
  if (m < 1 || m > g.order() || (set & ~g.vertices()) != 0 || isolated_vertices(g) != 0) return false;
  const int threshold = degree_threshold(g, m);
  for (int s : members(set))
    if (g.degree(s) < threshold) return false;
  return covers_all_edges(g, set);
}

std::vector<NexusCertificate> find_nexuses(const Graph& g, int m) {
  require_nexus_host(g, m);
  const int threshold = degree_threshold(g, m);
  std::vector<int> candidates;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= threshold) candidates.push_back(v);

  std::vector<NexusCertificate> out;
  const int k = static_cast<int>(candidates.size());
  // Walk m-combinations of the candidates in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    VertexSet set = 0;
    for (int i : pick) set |= singleton(candidates[static_cast<std::size_t>(i)]);
    if (covers_all_edges(g, set)) out.push_back(certify(g, m, set));
    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - m + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

NexusReduction nexus_reduce(const Graph& g, int m, const NexusReduceOptions& options) {
  require_nexus_host(g, m);
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return options.shuffle_seed ? false : a < b;
  });

  NexusReduction out;
  for (int i = 0; i < m; ++i) out.original_set |= singleton(order[static_cast<std::size_t>(i)]);
  out.input_is_km_plus_k2 =
      m + 2 == g.order() && are_isomorphic(g, disjoint_union(complete_graph(m), complete_graph(2)));

  // Deleting an edge never changes which other edges avoid S, so isolated
  // vertices can be dropped once at the end with the same result.
  Graph work = g;
  while (true) {
    std::vector<Edge> outside;
    for (const Edge& e : work.edges())
      if (((singleton(e.first) | singleton(e.second)) & out.original_set) == 0) outside.push_back(e);
    if (outside.empty()) break;
    const Edge pick = options.shuffle_seed
                          ? outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)]
                          : outside.front();
    work = delete_edge(work, pick.first, pick.second);
    out.deleted_edges.push_back(pick);
  }

  Relabeled reduced = drop_isolated(work, out.original_set);
  out.graph = std::move(reduced.graph);
  out.kept = std::move(reduced.kept);
  VertexSet set = 0;
  for (int i = 0; i < static_cast<int>(out.kept.size()); ++i)
    if ((out.original_set >> out.kept[static_cast<std::size_t>(i)]) & 1U) set |= singleton(i);
  out.certificate = certify(out.graph, m, set);
  return out;
}

MuBoundCheck lemma_mu_ge_e_check(const Graph& g, VertexSet set) {
  set &= g.vertices();
  if (set == 0) throw Error(ErrorKind::Precondition, "vertex subset must be nonempty");
  MuBoundCheck out;
  out.e = g.order();
  for (int s : members(set)) out.e = std::min(out.e, popcount(g.neighbors(s) & ~set));
  const ExactSpectrum exact(laplacian(g));
  const int size = popcount(set);
  out.bound_holds = exact.count_at_least(Rational(out.e)) >= size;
  out.equality = exact.compare_mu(size, Rational(out.e)) == 0;
  out.equality_condition_holds = !out.equality || out.e == 0 || !is_connected(g, set);
  return out;
}

}  // namespace lapbound
