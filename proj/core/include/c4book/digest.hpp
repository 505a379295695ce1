#pragma once

#include <string>
#include <string_view>

#include "c4book/graph.hpp"

namespace c4book {

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of the graph's graph6 encoding (vertex order as given).
std::string graph_digest(const Graph& g);

}  // namespace c4book
