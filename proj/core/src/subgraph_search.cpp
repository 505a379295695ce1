#include "c4book/subgraph_search.hpp"

#include <algorithm>

#include "c4book/error.hpp"

namespace c4book {

namespace {

struct State {
  Bitset alive;
  Bitset kept;
  std::vector<std::size_t> degree;
  std::size_t alive_count = 0;
};

enum class Outcome { Found, Exhausted, LimitHit };

class DeletionSearch {
 public:
  DeletionSearch(const Graph& g, std::size_t target, std::size_t min_deg)
      : g_(g), n_(g.order()), target_(target), min_deg_(min_deg) {}

  Outcome run(std::size_t offset, std::uint64_t limit, std::uint64_t& nodes, std::vector<Vertex>& found) {
    offset_ = offset;
    limit_ = limit;
    nodes_ = 0;
    State s;
    s.alive = Bitset(n_);
    s.alive.set_all();
    s.kept = Bitset(n_);
    s.degree.resize(n_);
    for (Vertex v = 0; v < n_; ++v) s.degree[v] = g_.degree(v);
    s.alive_count = n_;
    const Outcome out = explore(std::move(s), found);
    nodes = nodes_;
    return out;
  }

 private:
  bool remove(State& s, Vertex v) const {
    if (s.kept.test(v)) return false;
    s.alive.reset(v);
    --s.alive_count;
    (g_.neighbors(v) & s.alive).for_each([&](Vertex u) { --s.degree[u]; });
    return s.alive_count >= target_;
  }

  // Forced moves: a vertex below the floor must go; a kept vertex sitting
  // exactly on the floor pins its neighbours.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = s.alive.find_first(); v != Bitset::npos; v = s.alive.find_next(v + 1)) {
        if (s.degree[v] < min_deg_) {
          if (!remove(s, v)) return false;
          changed = true;
        }
      }
      if (changed) continue;
      for (Vertex v = s.kept.find_first(); v != Bitset::npos; v = s.kept.find_next(v + 1)) {
        if (s.degree[v] != min_deg_) continue;
        Bitset pin = g_.neighbors(v) & s.alive;
        pin.subtract(s.kept);
        if (pin.any()) {
          s.kept |= pin;
          changed = true;
        }
      }
    }
    return true;
  }

  Outcome explore(State s, std::vector<Vertex>& found) {
    if (++nodes_ > limit_) return Outcome::LimitHit;
    if (!propagate(s)) return Outcome::Exhausted;
    if (s.alive_count == target_) {
      found = s.alive.to_vector();
      return Outcome::Found;
    }
    Bitset open = s.alive;
    open.subtract(s.kept);
    if (open.count() < s.alive_count - target_) return Outcome::Exhausted;

    Vertex pick = Bitset::npos;
    for (Vertex v = open.find_first(); v != Bitset::npos; v = open.find_next(v + 1)) {
      if (pick == Bitset::npos || s.degree[v] < s.degree[pick] ||
          (s.degree[v] == s.degree[pick] && (v + offset_) % n_ < (pick + offset_) % n_)) {
        pick = v;
      }
    }

    State drop = s;
    if (remove(drop, pick)) {
      const Outcome first = explore(std::move(drop), found);
      if (first != Outcome::Exhausted) return first;
    }
    s.kept.set(pick);
    return explore(std::move(s), found);
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t target_;
  std::size_t min_deg_;
  std::size_t offset_ = 0;
  std::uint64_t limit_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> greedy_min_degree_subgraph(const Graph& g, std::size_t target_order,
                                                              std::size_t min_deg, std::uint64_t budget,
                                                              SubgraphSearchStats* stats) {
  if (target_order > g.order()) throw Error(Errc::DomainError, "target order exceeds the graph order");
  SubgraphSearchStats local;
  SubgraphSearchStats& st = stats != nullptr ? *stats : local;
  st = {};
  if (target_order == 0) return std::vector<Vertex>{};

  DeletionSearch search(g, target_order, min_deg);
  std::uint64_t limit = 1024;
  for (std::size_t restart = 0;; ++restart) {
    if (st.nodes >= budget) break;
    const std::uint64_t remaining = budget - st.nodes;
    const std::uint64_t run_limit = std::min(limit, remaining);
    std::uint64_t used = 0;
    std::vector<Vertex> found;
    const Outcome out = search.run((restart * 7919) % g.order(), run_limit, used, found);
    st.nodes += std::min(used, run_limit);
    st.restarts = restart;
    if (out == Outcome::Exhausted) return std::nullopt;
    if (out == Outcome::Found) {
      const Graph sub = induced_subgraph(g, found);
      if (found.size() != target_order || (target_order > 0 && min_degree(sub) < min_deg)) {
        throw Error(Errc::InternalInconsistency, "subgraph search returned an invalid vertex set");
      }
      return found;
    }
    limit *= 4;
  }
  throw Error(Errc::BudgetExhausted, "no qualifying subgraph within " + std::to_string(budget) + " nodes");
}

}  // namespace c4book
