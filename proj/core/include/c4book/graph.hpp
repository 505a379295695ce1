#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "c4book/bitset.hpp"

namespace c4book {

using Vertex = std::size_t;

/// Simple undirected graph on vertices 0..order()-1 stored as one adjacency
/// bitset per vertex. Symmetric and loop-free by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  /// Number of edges.
  std::size_t size() const noexcept;

  /// Ignores u == v; throws DomainError on an out-of-range vertex.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const noexcept { return rows_[v]; }
  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<Bitset> rows_;
};

/// Outcome of the C4 test. The witness, when present, is a 4-cycle
/// a-b-c-d-a with {a, c} the lexicographically first pair of distinct
/// vertices sharing two neighbours and b < d their first two common
/// neighbours.
struct C4Check {
  bool c4_free = true;
  std::optional<std::array<Vertex, 4>> witness;
};

C4Check is_c4_free(const Graph& g);

/// Intersection of the neighbourhoods of every vertex in `query`.
/// Throws EmptyQuerySet when the query is empty.
Bitset common_neighbors(const Graph& g, std::span<const Vertex> query);

/// Unordered pairs of distinct vertices with no common neighbour.
std::uint64_t non_two_path_pairs(const Graph& g);

struct KstReport {
  std::uint64_t lhs = 0;          // sum over v of C(d(v), 2)
  std::uint64_t rhs_basic = 0;    // C(N, 2)
  std::uint64_t pairs_without_two_path = 0;
  std::uint64_t rhs_refined = 0;  // C(N, 2) - p
  bool holds_basic = false;
  bool holds_refined = false;
};

KstReport kst_check(const Graph& g);

/// Returns k when every pair of distinct vertices has exactly one common
/// neighbour (requires at least two vertices); the graph is then checked to
/// be the friendship graph F_k on 2k+1 vertices, and InternalInconsistency
/// is thrown if that structural check fails.
std::optional<std::size_t> is_friendship(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, reindexed by increasing original index.
/// Duplicates are ignored; DomainError on an out-of-range vertex.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

struct DegreeProfile {
  std::vector<std::size_t> degrees;  // sorted ascending
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::map<std::size_t, std::size_t> histogram;  // degree -> vertex count
};

DegreeProfile degree_profile(const Graph& g);

std::size_t min_degree(const Graph& g);

}  // namespace c4book
