#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "c4book/graph.hpp"

namespace c4book {

struct SubgraphSearchStats {
  std::uint64_t nodes = 0;
  std::size_t restarts = 0;
};

/// Vertex set S with |S| = target_order whose induced subgraph has minimum
/// degree >= min_deg. Complete depth-first search over delete/keep choices
/// with degree propagation, branching on a lowest-degree undecided vertex
/// and trying deletion first; restarted with geometrically growing node
/// limits and rotated tie-breaks. Returns nullopt only when a run finished
/// without hitting its limit, which proves no such S exists. Throws
/// BudgetExhausted when `budget` nodes are spent first. DomainError if
/// target_order exceeds the order.
std::optional<std::vector<Vertex>> greedy_min_degree_subgraph(const Graph& g, std::size_t target_order,
                                                              std::size_t min_deg, std::uint64_t budget,
                                                              SubgraphSearchStats* stats = nullptr);

}  // namespace c4book
