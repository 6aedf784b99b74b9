#include "lapbound/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lapbound/graph6.hpp"

namespace lapbound {

namespace {

using Cells = std::vector<std::vector<int>>;
using Rows = std::array<VertexSet, kMaxVertices>;

constexpr std::size_t kMaxStoredAutomorphisms = 128;

VertexSet cell_mask(const std::vector<int>& cell) {
  VertexSet s = 0;
  for (int v : cell) s |= singleton(v);
  return s;
}

// Splits cells by neighbour counts into each other cell until the partition
// is equitable. Every decision depends only on the cell structure, so the
// result commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const VertexSet splitter = cell_mask(cells[w]);
      for (std::size_t x = 0; x < cells.size(); ++x) {
        if (cells[x].size() == 1) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cells[x].size());
        for (int v : cells[x]) keyed.emplace_back(popcount(g.neighbors(v) & splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<long>(x));
        cells.insert(cells.begin() + static_cast<long>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells.front().begin(), cells.front().end(), 0);
      refine(g_, cells);
    }
    std::vector<int> prefix;
    descend(cells, prefix);
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[best_order_[i]] = i;
    return perm;
  }

 private:
  void descend(const Cells& cells, std::vector<int>& prefix) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    std::size_t best_size = static_cast<std::size_t>(n_) + 1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && cells[i].size() < best_size) {
        best_size = cells[i].size();
        target = i;
      }

    std::vector<int> explored;
    for (int v : cells[target]) {
      if (equivalent_to_explored(prefix, explored, v)) continue;
      explored.push_back(v);
      Cells child = cells;
      auto& cell = child[target];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      child.insert(child.begin() + static_cast<long>(target), std::vector<int>{v});
      refine(g_, child);
      prefix.push_back(v);
      descend(child, prefix);
      prefix.pop_back();
    }
  }

  // v is skipped when an automorphism fixing the prefix pointwise maps an
  // explored sibling onto it.
  bool equivalent_to_explored(const std::vector<int>& prefix, const std::vector<int>& explored,
                              int v) {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) {
        int a = find_root(parent, u);
        int b = find_root(parent, gamma[u]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find_root(parent, v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int w) { return find_root(parent, w) == root; });
  }

  void leaf(const Cells& cells) {
    std::vector<int> order(n_);
    std::vector<int> position(n_);
    for (int i = 0; i < n_; ++i) {
      order[i] = cells[i].front();
      position[order[i]] = i;
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i)
      for (int w : members(g_.neighbors(order[i]))) rows[i] |= singleton(position[w]);

    if (!have_best_ || std::lexicographical_compare(rows.begin(), rows.begin() + n_,
                                                    best_rows_.begin(), best_rows_.begin() + n_)) {
      have_best_ = true;
      best_rows_ = rows;
      best_order_ = order;
    } else if (std::equal(rows.begin(), rows.begin() + n_, best_rows_.begin())) {
      if (automorphisms_.size() < kMaxStoredAutomorphisms) {
        std::vector<int> gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[order[i]] = best_order_[i];
        automorphisms_.push_back(std::move(gamma));
      }
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Rows best_rows_{};
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

CanonicalForm canonical_form(const Graph& g) { return {write_graph6(canonical_graph(g))}; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_graph(g) == canonical_graph(h);
}

}  // namespace lapbound
