#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lapbound {

inline constexpr int kMaxVertices = 32;

// Bit v set <=> vertex v is a member.
using VertexSet = std::uint32_t;

using Edge = std::pair<int, int>;

enum class ErrorKind {
  InvalidEdge,
  OutOfRange,
  Parse,
  Capacity,
  NotAnEdge,
  Precondition,
  InvalidParameter,
  InvalidPartition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline int popcount(VertexSet s) noexcept { return std::popcount(s); }

inline VertexSet singleton(int v) noexcept { return VertexSet{1} << v; }

inline VertexSet first_vertices(int n) noexcept {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Members of s in increasing order.
std::vector<int> members(VertexSet s);

VertexSet to_vertex_set(std::span<const int> vertices);

/// Finite simple graph on at most 32 vertices. Adjacency is one bitset per
/// vertex; values are immutable once built and every transformation returns
/// a new graph.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices.
  explicit Graph(int n);

  /// Duplicate edges collapse; loops and out-of-range endpoints throw.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Rows must be symmetric, loop-free and confined to the first n bits.
  static Graph from_adjacency(std::span<const VertexSet> rows);

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return first_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[check(v)]; }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }
  int degree(int v) const { return popcount(adj_[check(v)]); }
  int edge_count() const noexcept;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int check(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph empty_graph(int n);

Graph complement(const Graph& g);

/// Vertices of h are shifted by order(g).
Graph disjoint_union(const Graph& g, const Graph& h);

/// Non-increasing.
std::vector<int> degree_sequence(const Graph& g);

/// Throws NotAnEdge when uv is absent.
Graph delete_edge(const Graph& g, int u, int v);

struct Relabeled {
  Graph graph;
  // kept[new_label] = old_label
  std::vector<int> kept;
};

/// Removes every degree-0 vertex that is not in `protect`; survivors keep
/// their relative order.
Relabeled drop_isolated(const Graph& g, VertexSet protect = 0);

Relabeled induced_subgraph(const Graph& g, VertexSet subset);

/// perm[old] = new. Must be a permutation of 0..n-1.
Graph permute(const Graph& g, std::span<const int> perm);

VertexSet isolated_vertices(const Graph& g);

/// True for the empty set and singletons.
bool is_connected(const Graph& g, VertexSet subset);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

std::string to_edge_string(const Graph& g);

}  // namespace lapbound
