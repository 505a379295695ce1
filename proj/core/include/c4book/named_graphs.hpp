#pragma once

#include "c4book/graph.hpp"

// Small reference graphs used by tests, the CLI and documentation examples.
namespace c4book::named {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star(std::size_t leaves);
/// k triangles sharing vertex 0.
Graph friendship(std::size_t k);
Graph petersen();
/// copies disjoint copies of K2.
Graph matching(std::size_t copies);

}  // namespace c4book::named
