#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "c4book/canon.hpp"
#include "c4book/graph.hpp"

namespace c4book {

inline constexpr std::size_t kEnumerateMaxOrder = 13;
inline constexpr std::string_view kGeneratorVersion = "canon-augment/1";

/// Returns true when no completion of a partial graph to `target_order`
/// vertices can be accepted. Must be monotone: a cut graph's extensions are
/// never needed. Called concurrently when jobs > 1.
using Pruner = std::function<bool(const SmallGraph& partial, std::size_t target_order)>;

/// Returns true to accept a complete graph as a witness and stop.
/// Called concurrently when jobs > 1.
using Visitor = std::function<bool(const SmallGraph& complete)>;

struct EnumerateOptions {
  /// Generate only C4-free graphs. Off gives every graph up to isomorphism.
  bool c4_free = true;
  unsigned jobs = 1;
  /// Order of the prefix graphs handed to workers; 0 picks a default. The
  /// result does not depend on it.
  std::size_t split_depth = 0;
};

struct EnumerationResult {
  /// Complete graphs handed to the visitor (up to and including the witness).
  std::uint64_t graphs_examined = 0;
  /// Partial or complete graphs discarded by the pruner.
  std::uint64_t pruned = 0;
  /// First witness in canonical generation order.
  std::optional<SmallGraph> witness;
};

/// One graph per isomorphism class on `order` vertices by canonical
/// augmentation: a vertex is added only if it lies in the automorphism orbit
/// of the last canonical position. CapExceeded above kEnumerateMaxOrder.
EnumerationResult enumerate_graphs(std::size_t order, const Pruner& pruner, const Visitor& visitor,
                                   const EnumerateOptions& options = {});

/// C4-free classes only (options.c4_free is forced on).
EnumerationResult enumerate_c4_free(std::size_t order, const Pruner& pruner, const Visitor& visitor,
                                    EnumerateOptions options = {});

/// Cuts partial graphs that cannot reach the minimum degree N - u forced on
/// any C4-free graph on N vertices whose complement avoids B_n^(k), where u
/// is an upper bound for r(C4, B_n^(k-1)) (n itself when k = 1).
class MinDegreePruner {
 public:
  MinDegreePruner(std::size_t k, std::int64_t n);
  std::size_t required_degree(std::size_t order) const noexcept;
  bool operator()(const SmallGraph& partial, std::size_t target_order) const noexcept;

 private:
  std::int64_t reach_ = 0;
};

struct ExhaustionProof {
  std::size_t order = 0;
  std::size_t k = 0;
  std::int64_t n = 0;
  std::uint64_t graphs_examined = 0;
  std::uint64_t pruned = 0;
  bool all_rejected = false;
  std::string_view generator_version = kGeneratorVersion;
};

struct ExactSearchResult {
  ExhaustionProof proof;
  /// A C4-free graph whose complement avoids B_n^(k), re-verified.
  std::optional<Graph> witness;
};

/// Decides whether some C4-free graph on `order` vertices has a complement
/// without B_n^(k). A witness proves r >= order+1; exhaustion proves
/// r <= order.
ExactSearchResult search_ramsey_exact(std::size_t order, std::size_t k, std::int64_t n, unsigned jobs = 1,
                                      bool use_pruner = true);

/// Whether the complement of g contains B_n^(k), by spine search on rows.
bool complement_has_book(const SmallGraph& g, std::size_t k, std::int64_t n) noexcept;

}  // namespace c4book
