#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4book/graph.hpp"

namespace c4book {

/// A book B_n^(k) in the complement: an independent spine of G and the
/// vertices non-adjacent (in G) to every spine vertex.
struct BookWitness {
  std::vector<Vertex> spine;
  std::vector<Vertex> pages;
  std::size_t page_count = 0;
};

struct BookNumber {
  /// Largest n with B_n^(k) inside the complement; 0 if no independent
  /// k-set exists (then has_spine is false and the witness is empty).
  std::size_t nmax = 0;
  bool has_spine = false;
  /// Lexicographically smallest maximizing spine.
  BookWitness witness;
};

/// DomainError unless 1 <= k <= order. `jobs` splits the work by first spine
/// vertex; the result does not depend on it.
BookNumber complement_book_number(const Graph& g, std::size_t k, unsigned jobs = 1);

/// True iff g is C4-free and its complement has no B_n^(k). On N vertices
/// this proves r(C4, B_n^(k)) >= N+1. A k above the order leaves no spine,
/// so only C4-freeness matters. DomainError for k = 0.
bool is_ramsey_witness(const Graph& g, std::size_t k, std::int64_t n, unsigned jobs = 1);

/// Orders up to which certify_lower_bound re-derives the book number.
inline constexpr std::size_t kCertificateCrossCheckOrder = 80;

struct LowerBoundCertificate {
  std::string graph_hash;  // sha256 of the graph6 encoding
  std::string graph6;
  std::size_t order = 0;
  std::size_t spine = 0;
  std::size_t min_degree = 0;
  bool c4_free = false;
  /// n* = N - k(delta+1) + C(k,2) + 1; every independent k-set has at most
  /// n* - 1 common non-neighbours.
  std::int64_t guaranteed_book_free_n = 0;
  std::string implied_bound;
  std::string construction_note;
  /// Exact book number, when order <= kCertificateCrossCheckOrder.
  std::optional<std::size_t> cross_checked_nmax;
};

/// NotC4Free if g contains a C4; DomainError for k = 0 or an empty graph.
/// InternalInconsistency if the exact cross-check exceeds n* - 1.
LowerBoundCertificate certify_lower_bound(const Graph& g, std::size_t k, std::string construction_note = {},
                                          unsigned jobs = 1);

/// Independent k-sets {x_1..x_k} of vertices of degree <= deg_cap with each
/// x_j in a distinct A_i = N(v_i) \ (N(v) + v), v_i ranging over N(v), and no
/// three members sharing a common neighbour. Enumerated in lexicographic
/// order of the neighbour indices and stopped after `limit` sets. Each
/// returned set is sorted. Assumes g is C4-free, so the A_i are disjoint.
std::vector<std::vector<Vertex>> find_admissible_sets(const Graph& g, Vertex v, std::size_t k,
                                                      std::size_t deg_cap, std::size_t limit);

struct GoodPairs {
  std::uint64_t count = 0;
  std::vector<std::pair<Vertex, Vertex>> sample;  // first pairs in lexicographic order
};

/// Unordered pairs with disjoint neighbourhoods and both degrees <= deg_cap.
GoodPairs good_pairs(const Graph& g, std::size_t deg_cap, std::size_t sample_limit = 16);

}  // namespace c4book
