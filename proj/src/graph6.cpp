#include "lapbound/graph6.hpp"

namespace lapbound {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxHeaderOrder = 62;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "graph6: empty input");
  for (char ch : text) {
    const int b = static_cast<unsigned char>(ch);
    if (b < kOffset || b > 126)
      throw Error(ErrorKind::Parse, "graph6: byte " + std::to_string(b) + " out of range");
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n > kMaxHeaderOrder)
    throw Error(ErrorKind::Parse, "graph6: extended header (n >= 63) unsupported");
  if (n > kMaxVertices)
    throw Error(ErrorKind::Capacity, "graph6: " + std::to_string(n) + " vertices exceeds 32");
  if (text.size() != 1 + body_length(n))
    throw Error(ErrorKind::Parse, "graph6: expected " + std::to_string(1 + body_length(n)) +
                                      " bytes for n=" + std::to_string(n) + ", got " +
                                      std::to_string(text.size()));

  std::vector<VertexSet> rows(n);
  std::size_t bit = 0;
  auto next_bit = [&] {
    const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - kOffset;
    const bool set = (byte >> (5 - bit % 6)) & 1;
    ++bit;
    return set;
  };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (next_bit()) {
        rows[u] |= singleton(v);
        rows[v] |= singleton(u);
      }
  while (bit < 6 * body_length(n))
    if (next_bit()) throw Error(ErrorKind::Parse, "graph6: nonzero padding bits");
  return Graph::from_adjacency(rows);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1 + body_length(n), '\0');
  out[0] = static_cast<char>(n);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.adjacent(u, v)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] | (1 << (5 - bit % 6)));
  for (char& ch : out) ch = static_cast<char>(ch + kOffset);
  return out;
}

}  // namespace lapbound
