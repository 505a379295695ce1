#pragma once

#include <string>
#include <string_view>

#include "c4book/graph.hpp"

namespace c4book {

/// Largest order representable in graph6.
inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

/// Header-less graph6 encoding, no trailing newline.
std::string g6_encode(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" header and a single
/// trailing newline are accepted; anything else malformed raises
/// Graph6Error with the offending byte offset.
Graph g6_decode(std::string_view bytes);

}  // namespace c4book
