#include "c4book/named_graphs.hpp"

namespace c4book::named {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph friendship(std::size_t k) {
  Graph g(2 * k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    g.add_edge(0, 2 * i + 1);
    g.add_edge(0, 2 * i + 2);
    g.add_edge(2 * i + 1, 2 * i + 2);
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph matching(std::size_t copies) {
  Graph g(2 * copies);
  for (std::size_t i = 0; i < copies; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

}  // namespace c4book::named
