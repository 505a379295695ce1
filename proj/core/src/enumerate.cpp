#include "c4book/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>

#include "c4book/bounds.hpp"
#include "c4book/error.hpp"
#include "c4book/ramsey.hpp"
#include "parallel.hpp"

namespace c4book {

namespace {

constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

struct Counters {
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

class Generator {
 public:
  Generator(std::size_t target, const Pruner& pruner, const Visitor& visitor, bool c4_free)
      : target_(target), pruner_(pruner), visitor_(visitor), c4_free_(c4_free) {}

  bool cut(const SmallGraph& g, Counters& counters) const {
    if (pruner_ && pruner_(g, target_)) {
      ++counters.pruned;
      return true;
    }
    return false;
  }

  // Accepted one-vertex extensions of g, one per isomorphism class, in a
  // fixed order.
  std::vector<SmallGraph> children(const SmallGraph& g, Counters& counters) const {
    const std::size_t n = g.order();
    std::array<std::size_t, SmallGraph::kMaxOrder> degree{};
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);

    std::vector<SmallGraph> out;
    std::set<std::vector<std::uint64_t>> seen;
    auto consider = [&](std::uint64_t mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] + ((mask >> v) & 1U) > size) return;
      }
      SmallGraph child = g.with_vertex(mask);
      if (cut(child, counters)) return;
      const CanonicalLabeling canon = canonical_labeling(child);
      if (canon.orbit[n] != canon.orbit[canon.lab[n]]) return;
      if (!seen.insert(canon.form).second) return;
      out.push_back(child);
    };
    // Depth-first over increasing subsets; under the C4 filter the chosen
    // neighbourhoods must stay pairwise disjoint.
    auto extend = [&](auto&& self, std::size_t from, std::uint64_t mask, std::uint64_t covered) -> void {
      consider(mask);
      for (std::size_t v = from; v < n; ++v) {
        if (c4_free_ && (g.row(v) & covered) != 0) continue;
        self(self, v + 1, mask | (std::uint64_t{1} << v), covered | g.row(v));
      }
    };
    extend(extend, 0, 0, 0);
    return out;
  }

  // Returns true when a witness was found (stored in `witness`).
  bool descend(const SmallGraph& g, Counters& counters, std::optional<SmallGraph>& witness,
               const std::function<bool()>& cancelled) const {
    if (g.order() == target_) {
      ++counters.examined;
      if (visitor_ && visitor_(g)) {
        witness = g;
        return true;
      }
      return false;
    }
    if (cancelled && cancelled()) return false;
    for (const auto& child : children(g, counters)) {
      if (descend(child, counters, witness, cancelled)) return true;
    }
    return false;
  }

  // Prefix graphs of the given order in generation order; prunes_before[i]
  // counts prunes that occur before prefix i is reached.
  void prefixes(const SmallGraph& g, std::size_t depth, Counters& counters, std::vector<SmallGraph>& out,
                std::vector<std::uint64_t>& prunes_before) const {
    if (g.order() == depth) {
      out.push_back(g);
      prunes_before.push_back(counters.pruned);
      return;
    }
    for (const auto& child : children(g, counters)) prefixes(child, depth, counters, out, prunes_before);
  }

 private:
  std::size_t target_;
  const Pruner& pruner_;
  const Visitor& visitor_;
  bool c4_free_;
};

}  // namespace

EnumerationResult enumerate_graphs(std::size_t order, const Pruner& pruner, const Visitor& visitor,
                                   const EnumerateOptions& options) {
  if (order > kEnumerateMaxOrder) {
    throw Error(Errc::CapExceeded, "exhaustive enumeration is capped at " + std::to_string(kEnumerateMaxOrder) +
                                       " vertices");
  }
  EnumerationResult result;
  if (order == 0) {
    result.graphs_examined = 1;
    if (visitor && visitor(SmallGraph(0))) result.witness = SmallGraph(0);
    return result;
  }
  const Generator gen(order, pruner, visitor, options.c4_free);
  const SmallGraph root(1);
  Counters top;
  if (gen.cut(root, top)) {
    result.pruned = top.pruned;
    return result;
  }

  std::size_t split = options.split_depth;
  if (split == 0) split = order >= 9 ? order - 3 : 1;
  if (split <= 1 || split >= order) {
    std::optional<SmallGraph> witness;
    gen.descend(root, top, witness, {});
    result.graphs_examined = top.examined;
    result.pruned = top.pruned;
    result.witness = std::move(witness);
    return result;
  }

  std::vector<SmallGraph> prefixes;
  std::vector<std::uint64_t> prunes_before;
  gen.prefixes(root, split, top, prefixes, prunes_before);

  std::vector<Counters> counters(prefixes.size());
  std::vector<std::optional<SmallGraph>> witnesses(prefixes.size());
  std::atomic<std::size_t> first_witness{kNoTask};
  detail::parallel_for(prefixes.size(), options.jobs, [&](std::size_t i) {
    if (first_witness.load() < i) return;
    const std::function<bool()> cancelled = [&] { return first_witness.load(std::memory_order_relaxed) < i; };
    if (gen.descend(prefixes[i], counters[i], witnesses[i], cancelled)) {
      std::size_t seen = first_witness.load();
      while (i < seen && !first_witness.compare_exchange_weak(seen, i)) {
      }
    }
  });

  const std::size_t w = first_witness.load();
  const std::size_t last = w == kNoTask ? prefixes.size() : w + 1;
  result.pruned = w == kNoTask ? top.pruned : prunes_before[w];
  for (std::size_t i = 0; i < last; ++i) {
    result.graphs_examined += counters[i].examined;
    result.pruned += counters[i].pruned;
  }
  if (w != kNoTask) result.witness = witnesses[w];
  return result;
}

EnumerationResult enumerate_c4_free(std::size_t order, const Pruner& pruner, const Visitor& visitor,
                                    EnumerateOptions options) {
  options.c4_free = true;
  return enumerate_graphs(order, pruner, visitor, options);
}

MinDegreePruner::MinDegreePruner(std::size_t k, std::int64_t n) {
  if (k == 0) throw Error(Errc::DomainError, "spine size must be positive");
  if (n < 1) {
    reach_ = std::numeric_limits<std::int64_t>::max();
  } else if (k == 1) {
    reach_ = n;
  } else {
    reach_ = bounds::bound_report(n, static_cast<int>(k - 1)).upper.value;
  }
}

std::size_t MinDegreePruner::required_degree(std::size_t order) const noexcept {
  const auto N = static_cast<std::int64_t>(order);
  return N > reach_ ? static_cast<std::size_t>(N - reach_) : 0;
}

bool MinDegreePruner::operator()(const SmallGraph& partial, std::size_t target_order) const noexcept {
  const std::size_t need = required_degree(target_order);
  if (need == 0) return false;
  const std::size_t missing = target_order - partial.order();
  for (std::size_t v = 0; v < partial.order(); ++v) {
    if (partial.degree(v) + missing < need) return true;
  }
  return false;
}

bool complement_has_book(const SmallGraph& g, std::size_t k, std::int64_t n) noexcept {
  const std::size_t order = g.order();
  if (k == 0 || k > order) return false;
  const std::uint64_t all = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  std::array<std::uint64_t, SmallGraph::kMaxOrder> rows{};
  for (std::size_t v = 0; v < order; ++v) rows[v] = ~g.row(v) & all & ~(std::uint64_t{1} << v);

  auto search = [&](auto&& self, std::size_t depth, std::size_t last, std::uint64_t pool) -> bool {
    const auto bound = static_cast<std::int64_t>(std::popcount(pool)) - static_cast<std::int64_t>(k - depth);
    if (bound < n) return false;
    if (depth == k) return true;
    for (std::uint64_t r = pool & ~((std::uint64_t{2} << last) - 1); r != 0; r &= r - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(r));
      if (self(self, depth + 1, v, pool & rows[v])) return true;
    }
    return false;
  };
  for (std::size_t v = 0; v < order; ++v) {
    if (search(search, 1, v, rows[v])) return true;
  }
  return false;
}

ExactSearchResult search_ramsey_exact(std::size_t order, std::size_t k, std::int64_t n, unsigned jobs,
                                      bool use_pruner) {
  if (k == 0) throw Error(Errc::DomainError, "spine size must be positive");
  Pruner pruner;
  if (use_pruner) pruner = MinDegreePruner(k, n);
  const Visitor visitor = [k, n](const SmallGraph& g) { return !complement_has_book(g, k, n); };
  EnumerateOptions options;
  options.jobs = jobs;
  const EnumerationResult run = enumerate_c4_free(order, pruner, visitor, options);

  ExactSearchResult out;
  out.proof.order = order;
  out.proof.k = k;
  out.proof.n = n;
  out.proof.graphs_examined = run.graphs_examined;
  out.proof.pruned = run.pruned;
  out.proof.all_rejected = !run.witness.has_value();
  if (run.witness) {
    Graph g = run.witness->to_graph();
    if (!is_ramsey_witness(g, k, n)) {
      throw Error(Errc::InternalInconsistency, "enumerated witness failed re-verification");
    }
    out.witness = std::move(g);
  }
  return out;
}

}  // namespace c4book
