#include "c4book/graph.hpp"

#include <algorithm>

#include "c4book/error.hpp"

namespace c4book {

Graph::Graph(std::size_t order) : rows_(order, Bitset(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= rows_.size()) {
    throw Error(Errc::DomainError,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(rows_.size()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return;
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = rows_[u].find_next(u + 1); v != Bitset::npos; v = rows_[u].find_next(v + 1)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

C4Check is_c4_free(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (!intersects_twice(g.neighbors(a), g.neighbors(c))) continue;
      const Bitset common = g.neighbors(a) & g.neighbors(c);
      const Vertex b = common.find_first();
      const Vertex d = common.find_next(b + 1);
      return {false, std::array<Vertex, 4>{a, b, c, d}};
    }
  }
  return {};
}

Bitset common_neighbors(const Graph& g, std::span<const Vertex> query) {
  if (query.empty()) throw Error(Errc::EmptyQuerySet, "common_neighbors needs at least one vertex");
  for (Vertex v : query) {
    if (v >= g.order()) throw Error(Errc::DomainError, "query vertex out of range");
  }
  Bitset result = g.neighbors(query.front());
  for (Vertex v : query.subspan(1)) result &= g.neighbors(v);
  return result;
}

std::uint64_t non_two_path_pairs(const Graph& g) {
  const std::size_t n = g.order();
  std::uint64_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (intersection_count(g.neighbors(u), g.neighbors(v)) == 0) ++count;
    }
  }
  return count;
}

KstReport kst_check(const Graph& g) {
  const std::uint64_t n = g.order();
  KstReport r;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    r.lhs += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  r.rhs_basic = n * (n - (n > 0 ? 1 : 0)) / 2;
  r.pairs_without_two_path = non_two_path_pairs(g);
  r.rhs_refined = r.rhs_basic - r.pairs_without_two_path;
  r.holds_basic = r.lhs <= r.rhs_basic;
  r.holds_refined = r.lhs <= r.rhs_refined;
  return r;
}

std::optional<std::size_t> is_friendship(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (intersection_count(g.neighbors(u), g.neighbors(v)) != 1) return std::nullopt;
    }
  }

  // Every pair has exactly one common neighbour: the graph must be F_k.
  auto fail = [](const std::string& why) {
    throw Error(Errc::InternalInconsistency, "pair condition holds but graph is not a friendship graph: " + why);
  };
  if (n % 2 == 0) fail("even order");
  const std::size_t k = (n - 1) / 2;
  Vertex hub = Bitset::npos;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      hub = v;
      break;
    }
  }
  if (hub == Bitset::npos) fail("no universal vertex");
  for (Vertex v = 0; v < n; ++v) {
    if (v == hub) continue;
    if (g.degree(v) != 2) fail("non-hub vertex of degree " + std::to_string(g.degree(v)));
  }
  if (g.size() != 3 * k) fail("wrong edge count");
  return k;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && sorted.back() >= g.order()) throw Error(Errc::DomainError, "induced_subgraph vertex out of range");
  Graph out(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) out.add_edge(i, j);
    }
  }
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  std::sort(p.degrees.begin(), p.degrees.end());
  for (std::size_t d : p.degrees) ++p.histogram[d];
  if (!p.degrees.empty()) {
    p.min_degree = p.degrees.front();
    p.max_degree = p.degrees.back();
  }
  return p;
}

std::size_t min_degree(const Graph& g) {
  std::size_t best = g.order() == 0 ? 0 : g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace c4book
