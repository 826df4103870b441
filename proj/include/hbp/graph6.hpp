#pragma once

#include <string>
#include <string_view>

#include "hbp/graph.hpp"

namespace hbp {

// Short-form graph6 (order <= 62): header byte order+63, then the upper
// triangle in column-major order (x01, x02, x12, x03, ...) packed into
// 6-bit groups, each emitted as value+63. Zero padding, strict on decode.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Plain text fallback for orders beyond 62: "n m" header, then "u v" lines.
std::string encode_edgelist(const Graph& g);
Graph decode_edgelist(std::string_view text);

// Sniffs edgelist ("digits space digits" first line) vs graph6.
Graph parse_graph(std::string_view text);

}  // namespace hbp
