#pragma once

#include <string>
#include <string_view>

#include "lapbound/graph.hpp"

namespace lapbound {

// graph6 for 0 <= n <= 62: a header byte 63+n followed by the upper triangle
// in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most
// significant bit first, each byte offset by 63. Padding bits must be zero.

/// Throws Error(Parse) on malformed input and Error(Capacity) for n > 32.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace lapbound
