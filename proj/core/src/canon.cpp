#include "c4book/canon.hpp"

#include <algorithm>
#include <numeric>

#include "c4book/error.hpp"

namespace c4book {

SmallGraph::SmallGraph(std::size_t order) : n_(order) {
  if (order > kMaxOrder) throw Error(Errc::DomainError, "SmallGraph holds at most 64 vertices");
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  SmallGraph s(g.order());
  for (const auto& [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

Graph SmallGraph::to_graph() const {
  Graph g(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::uint64_t r = rows_[u] >> (u + 1); r != 0; r &= r - 1) {
      g.add_edge(u, u + 1 + static_cast<std::size_t>(std::countr_zero(r)));
    }
  }
  return g;
}

std::size_t SmallGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

SmallGraph SmallGraph::with_vertex(std::uint64_t mask) const {
  if (n_ >= kMaxOrder) throw Error(Errc::CapExceeded, "SmallGraph holds at most 64 vertices");
  SmallGraph out = *this;
  out.rows_[n_] = mask;
  for (std::uint64_t r = mask; r != 0; r &= r - 1) {
    out.rows_[static_cast<std::size_t>(std::countr_zero(r))] |= std::uint64_t{1} << n_;
  }
  ++out.n_;
  return out;
}

bool SmallGraph::c4_free() const noexcept {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (std::popcount(rows_[u] & rows_[v]) >= 2) return false;
    }
  }
  return true;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<std::uint8_t>& lab) {
  const std::size_t n = g.order();
  std::array<std::uint8_t, SmallGraph::kMaxOrder> pos{};
  for (std::size_t i = 0; i < n; ++i) pos[lab[i]] = static_cast<std::uint8_t>(i);
  SmallGraph out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t r = g.row(lab[i]); r != 0; r &= r - 1) {
      out.add_edge(i, pos[static_cast<std::size_t>(std::countr_zero(r))]);
    }
  }
  return out;
}

namespace {

using Perm = std::vector<std::uint8_t>;

// Ordered partition: lab holds vertices, begins[i] marks the first position
// of a cell.
struct Partition {
  std::vector<std::uint8_t> lab;
  std::vector<bool> begins;
};

std::size_t cell_end(const Partition& p, std::size_t start) {
  std::size_t e = start + 1;
  while (e < p.lab.size() && !p.begins[e]) ++e;
  return e;
}

// Splits cells until every cell is equitable with respect to every other;
// after any split the scan restarts from the first cell.
void refine(const SmallGraph& g, Partition& p) {
  const std::size_t n = p.lab.size();
  std::array<int, SmallGraph::kMaxOrder> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < n && !changed; w = cell_end(p, w)) {
      const std::size_t w_end = cell_end(p, w);
      std::uint64_t mask = 0;
      for (std::size_t i = w; i < w_end; ++i) mask |= std::uint64_t{1} << p.lab[i];
      for (std::size_t x = 0; x < n && !changed; x = cell_end(p, x)) {
        const std::size_t x_end = cell_end(p, x);
        if (x_end - x == 1) continue;
        bool uniform = true;
        for (std::size_t i = x; i < x_end; ++i) {
          count[p.lab[i]] = std::popcount(g.row(p.lab[i]) & mask);
          if (count[p.lab[i]] != count[p.lab[x]]) uniform = false;
        }
        if (uniform) continue;
        std::stable_sort(p.lab.begin() + static_cast<std::ptrdiff_t>(x), p.lab.begin() + static_cast<std::ptrdiff_t>(x_end),
                         [&](std::uint8_t a, std::uint8_t b) { return count[a] < count[b]; });
        for (std::size_t i = x + 1; i < x_end; ++i) {
          if (count[p.lab[i]] != count[p.lab[i - 1]]) p.begins[i] = true;
        }
        changed = true;
      }
    }
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition p;
    p.lab.resize(n_);
    p.begins.assign(n_, false);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](std::uint8_t a, std::uint8_t b) { return g_.degree(a) < g_.degree(b); });
    for (std::size_t i = 0; i < n_; ++i) {
      p.begins[i] = i == 0 || g_.degree(p.lab[i]) != g_.degree(p.lab[i - 1]);
    }
    refine(g_, p);
    search(p);

    CanonicalLabeling out;
    out.lab = best_lab_;
    out.form = best_form_;
    out.generators = generators_.size();
    out.leaves = leaves_;
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      for (std::size_t v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    out.orbit.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) out.orbit[v] = static_cast<std::uint8_t>(uf.find(v));
    return out;
  }

 private:
  std::vector<std::uint64_t> leaf_form(const std::vector<std::uint8_t>& lab) const {
    std::array<std::uint8_t, SmallGraph::kMaxOrder> pos{};
    for (std::size_t i = 0; i < n_; ++i) pos[lab[i]] = static_cast<std::uint8_t>(i);
    std::vector<std::uint64_t> form(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint64_t r = g_.row(lab[i]); r != 0; r &= r - 1) {
        form[i] |= std::uint64_t{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
      }
    }
    return form;
  }

  void record_automorphism(const std::vector<std::uint8_t>& from, const std::vector<std::uint8_t>& to) {
    Perm gen(n_);
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) {
      gen[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  void leaf(const Partition& p) {
    ++leaves_;
    auto form = leaf_form(p.lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = p.lab;
      first_form_ = best_form_ = std::move(form);
      return;
    }
    if (form == first_form_) {
      record_automorphism(first_lab_, p.lab);
    } else if (form == best_form_) {
      record_automorphism(best_lab_, p.lab);
    } else if (form > best_form_) {
      best_form_ = std::move(form);
      best_lab_ = p.lab;
    }
  }

  void search(const Partition& p) {
    std::size_t target = n_;
    std::size_t target_end = n_;
    for (std::size_t s = 0; s < n_; s = cell_end(p, s)) {
      const std::size_t e = cell_end(p, s);
      if (e - s > 1) {
        target = s;
        target_end = e;
        break;
      }
    }
    if (target == n_) {
      leaf(p);
      return;
    }
    std::vector<std::size_t> explored;
    std::vector<std::uint8_t> cell(p.lab.begin() + static_cast<std::ptrdiff_t>(target),
                                   p.lab.begin() + static_cast<std::ptrdiff_t>(target_end));
    std::sort(cell.begin(), cell.end());
    for (std::uint8_t v : cell) {
      if (!explored.empty() && equivalent_to_explored(v, explored)) continue;
      explored.push_back(v);
      Partition child = p;
      auto it = std::find(child.lab.begin() + static_cast<std::ptrdiff_t>(target),
                          child.lab.begin() + static_cast<std::ptrdiff_t>(target_end), v);
      std::iter_swap(child.lab.begin() + static_cast<std::ptrdiff_t>(target), it);
      child.begins[target + 1] = true;
      prefix_.push_back(v);
      refine(g_, child);
      search(child);
      prefix_.pop_back();
    }
  }

  // Whether v shares an orbit with an explored sibling under the group
  // generated by known automorphisms that fix the current prefix pointwise.
  bool equivalent_to_explored(std::uint8_t v, const std::vector<std::size_t>& explored) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gen : generators_) {
      const bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](std::uint8_t x) { return gen[x] == x; });
      if (!fixes) continue;
      any = true;
      for (std::size_t x = 0; x < n_; ++x) uf.unite(x, gen[x]);
    }
    if (!any) return false;
    const std::size_t root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](std::size_t u) { return uf.find(u) == root; });
  }

  const SmallGraph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> prefix_;
  std::vector<Perm> generators_;
  std::vector<std::uint8_t> first_lab_;
  std::vector<std::uint64_t> first_form_;
  std::vector<std::uint8_t> best_lab_;
  std::vector<std::uint64_t> best_form_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

}  // namespace c4book
