#include "lapbound/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lapbound {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet to_vertex_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices)
      throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    s |= singleton(v);
  }
  return s;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorKind::Capacity,
                "vertex count " + std::to_string(n) + " outside [0, 32]");
}

int Graph::check(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorKind::OutOfRange,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  return v;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") out of range");
    if (u == v)
      throw Error(ErrorKind::InvalidEdge, "loop at vertex " + std::to_string(u));
    g.adj_[u] |= singleton(v);
    g.adj_[v] |= singleton(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  const VertexSet all = first_vertices(n);
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~all) != 0)
      throw Error(ErrorKind::OutOfRange, "adjacency row " + std::to_string(v) + " has stray bits");
    if ((rows[v] >> v) & 1U)
      throw Error(ErrorKind::InvalidEdge, "loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for (int v : members(rows[u]))
      if (!((rows[v] >> u) & 1U))
        throw Error(ErrorKind::InvalidEdge, "adjacency is not symmetric");
  return g;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : members(adj_[u] & ~first_vertices(u + 1))) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) throw Error(ErrorKind::InvalidEdge, "loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= singleton(v);
  g.adj_[v] |= singleton(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!adjacent(u, v))
    throw Error(ErrorKind::NotAnEdge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  Graph g = *this;
  g.adj_[u] &= ~singleton(v);
  g.adj_[v] &= ~singleton(u);
  return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = ~g.neighbors(v) & g.vertices() & ~singleton(v);
  return Graph::from_adjacency(rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices)
    throw Error(ErrorKind::Capacity, "disjoint union would have " + std::to_string(n) + " vertices");
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.neighbors(v) << g.order();
  return Graph::from_adjacency(rows);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph delete_edge(const Graph& g, int u, int v) { return g.without_edge(u, v); }

Relabeled induced_subgraph(const Graph& g, VertexSet subset) {
  subset &= g.vertices();
  Relabeled out{Graph{}, members(subset)};
  std::vector<int> to_new(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.kept.size()); ++i) to_new[out.kept[i]] = i;
  std::vector<VertexSet> rows(out.kept.size());
  for (int i = 0; i < static_cast<int>(out.kept.size()); ++i)
    for (int w : members(g.neighbors(out.kept[i]) & subset)) rows[i] |= singleton(to_new[w]);
  out.graph = Graph::from_adjacency(rows);
  return out;
}

Relabeled drop_isolated(const Graph& g, VertexSet protect) {
  return induced_subgraph(g, g.vertices() & ~(isolated_vertices(g) & ~protect));
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw Error(ErrorKind::InvalidParameter, "permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U))
      throw Error(ErrorKind::InvalidParameter, "not a permutation");
    seen |= singleton(p);
  }
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v)
    for (int w : members(g.neighbors(v))) rows[perm[v]] |= singleton(perm[w]);
  return Graph::from_adjacency(rows);
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet s = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) s |= singleton(v);
  return s;
}

bool is_connected(const Graph& g, VertexSet subset) {
  subset &= g.vertices();
  if (popcount(subset) <= 1) return true;
  VertexSet reached = subset & (~subset + 1);
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    next &= subset & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == subset;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    VertexSet comp = left & (~left + 1);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::string to_edge_string(const Graph& g) {
  std::ostringstream os;
  os << g.order();
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  return os.str();
}

}  // namespace lapbound
