#pragma once

#include <cstdint>
#include <optional>

#include "c4book/graph.hpp"

namespace c4book {

struct ProbeStats {
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
  std::uint64_t best_objective = 0;
};

/// Local search for a C4-free graph on q^2+q+3 vertices whose complement has
/// no B_{q^2-q+1}^(2). Simulated annealing over C4-free graphs seeded from
/// ER_q plus two isolated vertices; the objective is the total excess of
/// common non-neighbours over q^2-q across independent pairs. A returned
/// graph has been re-verified with is_ramsey_witness. Empty when `budget`
/// steps pass without success, which says nothing about existence.
/// DomainError unless q is a prime power with q^2+q+3 <= 64.
std::optional<Graph> probe_gq(std::uint64_t q, std::uint64_t budget, std::uint64_t seed = 1,
                              ProbeStats* stats = nullptr);

}  // namespace c4book
