#include "c4book/ramsey.hpp"

#include <algorithm>
#include <atomic>

#include "c4book/digest.hpp"
#include "c4book/error.hpp"
#include "c4book/graph6.hpp"
#include "parallel.hpp"

namespace c4book {

namespace {

std::vector<Bitset> complement_rows(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    Bitset row = g.neighbors(v);
    row.flip();
    row.reset(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Depth-first search over increasing spines whose first vertex is fixed.
class SpineSearch {
 public:
  SpineSearch(const std::vector<Bitset>& rows, std::size_t k, const std::atomic<long long>& global)
      : rows_(rows), k_(k), global_(global), levels_(k + 1, Bitset(rows.empty() ? 0 : rows.size())) {}

  // Returns the best page count (or -1) found for spines starting at `first`.
  long long run(Vertex first) {
    spine_.assign(1, first);
    levels_[1] = rows_[first];
    descend(1);
    return best_;
  }

  const std::vector<Vertex>& best_spine() const { return best_spine_; }
  const Bitset& best_pages() const { return best_pages_; }

 private:
  void descend(std::size_t depth) {
    const Bitset& pool = levels_[depth];
    const auto remaining = static_cast<long long>(k_ - depth);
    const auto bound = static_cast<long long>(pool.count()) - remaining;
    if (bound <= best_ || bound < global_.load(std::memory_order_relaxed)) return;
    if (depth == k_) {
      best_ = bound;
      best_spine_ = spine_;
      best_pages_ = pool;
      return;
    }
    for (std::size_t v = pool.find_next(spine_.back() + 1); v != Bitset::npos; v = pool.find_next(v + 1)) {
      levels_[depth + 1] = pool;
      levels_[depth + 1] &= rows_[v];
      spine_.push_back(v);
      descend(depth + 1);
      spine_.pop_back();
      const auto again = static_cast<long long>(pool.count()) - remaining;
      if (again <= best_) return;
    }
  }

  const std::vector<Bitset>& rows_;
  std::size_t k_;
  const std::atomic<long long>& global_;
  std::vector<Bitset> levels_;
  std::vector<Vertex> spine_;
  long long best_ = -1;
  std::vector<Vertex> best_spine_;
  Bitset best_pages_;
};

struct TaskResult {
  long long value = -1;
  std::vector<Vertex> spine;
  Bitset pages;
};

}  // namespace

BookNumber complement_book_number(const Graph& g, std::size_t k, unsigned jobs) {
  const std::size_t n = g.order();
  if (k < 1 || k > n) throw Error(Errc::DomainError, "spine size must lie in [1, order]");
  const auto rows = complement_rows(g);

  std::atomic<long long> global{-1};
  std::vector<TaskResult> results(n);
  detail::parallel_for(n, jobs, [&](std::size_t first) {
    SpineSearch search(rows, k, global);
    const long long value = search.run(first);
    if (value < 0) return;
    results[first] = {value, search.best_spine(), search.best_pages()};
    long long seen = global.load();
    while (value > seen && !global.compare_exchange_weak(seen, value)) {
    }
  });

  BookNumber out;
  const TaskResult* best = nullptr;
  for (const auto& r : results) {
    if (r.value >= 0 && (best == nullptr || r.value > best->value)) best = &r;
  }
  if (best == nullptr) return out;
  out.has_spine = true;
  out.nmax = static_cast<std::size_t>(best->value);
  out.witness.spine = best->spine;
  out.witness.pages = best->pages.to_vector();
  out.witness.page_count = out.nmax;
  return out;
}

bool is_ramsey_witness(const Graph& g, std::size_t k, std::int64_t n, unsigned jobs) {
  if (k == 0) throw Error(Errc::DomainError, "spine size must be positive");
  if (!is_c4_free(g).c4_free) return false;
  if (k > g.order()) return true;
  const BookNumber book = complement_book_number(g, k, jobs);
  if (!book.has_spine) return true;
  return static_cast<std::int64_t>(book.nmax) < n;
}

LowerBoundCertificate certify_lower_bound(const Graph& g, std::size_t k, std::string construction_note,
                                          unsigned jobs) {
  if (k == 0) throw Error(Errc::DomainError, "spine size must be positive");
  if (g.order() == 0) throw Error(Errc::DomainError, "cannot certify the empty graph");
  const C4Check c4 = is_c4_free(g);
  if (!c4.c4_free) {
    const auto& w = *c4.witness;
    throw Error(Errc::NotC4Free, "graph contains the 4-cycle " + std::to_string(w[0]) + "-" + std::to_string(w[1]) +
                                     "-" + std::to_string(w[2]) + "-" + std::to_string(w[3]));
  }
  LowerBoundCertificate cert;
  cert.graph6 = g6_encode(g);
  cert.graph_hash = sha256_hex(cert.graph6);
  cert.order = g.order();
  cert.spine = k;
  cert.min_degree = min_degree(g);
  cert.c4_free = true;
  const auto N = static_cast<std::int64_t>(cert.order);
  const auto kk = static_cast<std::int64_t>(k);
  const auto delta = static_cast<std::int64_t>(cert.min_degree);
  cert.guaranteed_book_free_n = N - kk * (delta + 1) + kk * (kk - 1) / 2 + 1;
  cert.implied_bound = "r(C4,B_" + std::to_string(cert.guaranteed_book_free_n) + "^(" + std::to_string(k) +
                       ")) >= " + std::to_string(N + 1);
  cert.construction_note = std::move(construction_note);

  if (cert.order <= kCertificateCrossCheckOrder && k <= cert.order) {
    const BookNumber book = complement_book_number(g, k, jobs);
    cert.cross_checked_nmax = book.nmax;
    if (book.has_spine && static_cast<std::int64_t>(book.nmax) > cert.guaranteed_book_free_n - 1) {
      throw Error(Errc::InternalInconsistency, "complement contains B_" + std::to_string(book.nmax) + "^(" +
                                                   std::to_string(k) + ") beyond the certified bound");
    }
  }
  return cert;
}

namespace {

class AdmissibleSearch {
 public:
  AdmissibleSearch(const Graph& g, Vertex v, std::size_t k, std::size_t deg_cap, std::size_t limit)
      : g_(g), k_(k), limit_(limit) {
    const Bitset& around = g.neighbors(v);
    Bitset low(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
      if (g.degree(x) <= deg_cap) low.set(x);
    }
    around.for_each([&](Vertex vi) {
      Bitset a = g.neighbors(vi);
      a.subtract(around);
      a.reset(v);
      a &= low;
      parts_.push_back(std::move(a));
    });
  }

  std::vector<std::vector<Vertex>> run() {
    Bitset forbidden(g_.order());
    descend(0, forbidden);
    return std::move(found_);
  }

 private:
  void descend(std::size_t first_part, const Bitset& forbidden) {
    if (found_.size() >= limit_) return;
    if (chosen_.size() == k_) {
      auto set = chosen_;
      std::sort(set.begin(), set.end());
      found_.push_back(std::move(set));
      return;
    }
    const std::size_t needed = k_ - chosen_.size();
    for (std::size_t i = first_part; i + needed <= parts_.size(); ++i) {
      Bitset options = parts_[i];
      options.subtract(forbidden);
      for (std::size_t x = options.find_first(); x != Bitset::npos; x = options.find_next(x + 1)) {
        Bitset next = forbidden;
        next.set(x);
        next |= g_.neighbors(x);
        // A vertex adjacent to a common neighbour of x and an earlier pick
        // would be the third member over that neighbour.
        for (Vertex y : chosen_) {
          const Bitset shared = g_.neighbors(x) & g_.neighbors(y);
          shared.for_each([&](Vertex w) { next |= g_.neighbors(w); });
        }
        chosen_.push_back(x);
        descend(i + 1, next);
        chosen_.pop_back();
        if (found_.size() >= limit_) return;
      }
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::size_t limit_;
  std::vector<Bitset> parts_;
  std::vector<Vertex> chosen_;
  std::vector<std::vector<Vertex>> found_;
};

}  // namespace

std::vector<std::vector<Vertex>> find_admissible_sets(const Graph& g, Vertex v, std::size_t k,
                                                      std::size_t deg_cap, std::size_t limit) {
  if (v >= g.order()) throw Error(Errc::DomainError, "vertex out of range");
  if (k == 0) throw Error(Errc::DomainError, "set size must be positive");
  if (limit == 0) return {};
  return AdmissibleSearch(g, v, k, deg_cap, limit).run();
}

GoodPairs good_pairs(const Graph& g, std::size_t deg_cap, std::size_t sample_limit) {
  GoodPairs out;
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) > deg_cap) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) > deg_cap) continue;
      if (intersection_count(g.neighbors(u), g.neighbors(v)) != 0) continue;
      ++out.count;
      if (out.sample.size() < sample_limit) out.sample.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace c4book
