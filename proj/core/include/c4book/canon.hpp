#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "c4book/graph.hpp"

namespace c4book {

/// Dense graph on at most 64 vertices, one 64-bit row per vertex. The
/// workhorse of exhaustive search and local-search probes.
class SmallGraph {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  SmallGraph() = default;
  /// DomainError if order > kMaxOrder.
  explicit SmallGraph(std::size_t order);
  static SmallGraph from_graph(const Graph& g);
  Graph to_graph() const;

  std::size_t order() const noexcept { return n_; }
  std::uint64_t row(std::size_t v) const noexcept { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return (rows_[u] >> v) & 1U; }
  std::size_t degree(std::size_t v) const noexcept { return static_cast<std::size_t>(std::popcount(rows_[v])); }
  std::size_t max_degree() const noexcept;

  void add_edge(std::size_t u, std::size_t v) noexcept {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(std::size_t u, std::size_t v) noexcept {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  /// Copy with one more vertex whose neighbourhood is `mask`.
  SmallGraph with_vertex(std::uint64_t mask) const;

  bool c4_free() const noexcept;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.rows_[i] != b.rows_[i]) return false;
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

struct CanonicalLabeling {
  /// lab[i] is the vertex placed at canonical position i.
  std::vector<std::uint8_t> lab;
  /// Adjacency rows of the relabelled graph; equal iff isomorphic.
  std::vector<std::uint64_t> form;
  /// Smallest vertex in each vertex's automorphism orbit.
  std::vector<std::uint8_t> orbit;
  std::size_t generators = 0;
  std::size_t leaves = 0;
};

/// Canonical form by equitable refinement (initial cells by ascending
/// degree) and individualization, keeping the lexicographically largest
/// leaf and pruning with automorphisms found along the way. The last
/// canonical position always holds a vertex of maximum degree.
CanonicalLabeling canonical_labeling(const SmallGraph& g);

/// Graph with vertex lab[i] renamed to i.
SmallGraph relabel(const SmallGraph& g, const std::vector<std::uint8_t>& lab);

}  // namespace c4book
