#include <doctest.h>

#include <random>

#include "c4book/canon.hpp"
#include "c4book/error.hpp"
#include "c4book/geometry.hpp"
#include "c4book/graph.hpp"
#include "c4book/graph6.hpp"
#include "c4book/named_graphs.hpp"
#include "c4book/ramsey.hpp"
#include "c4book/subgraph_search.hpp"
#include "oracle/naive.hpp"

using namespace c4book;

namespace {

Graph er(std::uint64_t q) {
  gf::PrimePower pp{};
  REQUIRE(gf::prime_power(q, pp));
  return geometry::er_graph(gf::Field(static_cast<gf::Residue>(pp.p), pp.e));
}

void check_witness(const Graph& g, std::size_t k, const BookNumber& b) {
  REQUIRE(b.witness.spine.size() == k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) REQUIRE_FALSE(g.adjacent(b.witness.spine[i], b.witness.spine[j]));
  }
  REQUIRE(b.witness.pages.size() == b.nmax);
  REQUIRE(b.witness.page_count == b.nmax);
  for (Vertex p : b.witness.pages) {
    for (Vertex s : b.witness.spine) {
      REQUIRE(p != s);
      REQUIRE_FALSE(g.adjacent(p, s));
    }
  }
}

std::size_t common_count(const Graph& g, Vertex a, Vertex b) {
  std::size_t c = 0;
  for (Vertex w = 0; w < g.order(); ++w) c += (g.adjacent(a, w) && g.adjacent(b, w)) ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("complement_book_number examples") {
  const auto e5 = complement_book_number(named::empty(5), 2);
  CHECK(e5.nmax == 3);
  CHECK(e5.has_spine);
  CHECK(e5.witness.spine == std::vector<Vertex>{0, 1});
  check_witness(named::empty(5), 2, e5);
  const auto c6 = complement_book_number(named::cycle(6), 1);
  CHECK(c6.nmax == 3);
  CHECK(c6.witness.spine == std::vector<Vertex>{0});
  const auto k4 = complement_book_number(named::complete(4), 2);
  CHECK(k4.nmax == 0);
  CHECK_FALSE(k4.has_spine);
  CHECK(k4.witness.spine.empty());
  CHECK_THROWS_AS(complement_book_number(named::cycle(4), 0), Error);
  CHECK_THROWS_AS(complement_book_number(named::cycle(4), 5), Error);
}

TEST_CASE("complement_book_number agrees with the brute-force oracle") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> order(1, 12);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 3;
    if (k > g.order()) continue;
    const auto mine = complement_book_number(g, k);
    const auto ref = oracle::book_number(oracle::matrix_of(g), k);
    REQUIRE(mine.has_spine == ref.has_spine);
    REQUIRE(mine.nmax == ref.nmax);
    if (mine.has_spine) check_witness(g, k, mine);
    REQUIRE(complement_book_number(g, k, 3).witness.spine == mine.witness.spine);
  }
}

TEST_CASE("witness spine is the lexicographically smallest maximizer") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(9, 0.35, rng);
    const auto b = complement_book_number(g, 2);
    if (!b.has_spine) continue;
    std::vector<Vertex> best;
    for (Vertex u = 0; u < 9 && best.empty(); ++u) {
      for (Vertex v = u + 1; v < 9; ++v) {
        if (g.adjacent(u, v)) continue;
        std::size_t pages = 0;
        for (Vertex w = 0; w < 9; ++w) pages += (w != u && w != v && !g.adjacent(u, w) && !g.adjacent(v, w)) ? 1 : 0;
        if (pages == b.nmax) {
          best = {u, v};
          break;
        }
      }
    }
    CHECK(b.witness.spine == best);
  }
}

TEST_CASE("is_ramsey_witness") {
  CHECK(is_ramsey_witness(named::cycle(6), 1, 4));
  CHECK_FALSE(is_ramsey_witness(named::cycle(4), 1, 100));
  CHECK_FALSE(is_ramsey_witness(named::cycle(4), 2, 1));
  CHECK(is_ramsey_witness(er(3), 1, 10));
  CHECK_FALSE(is_ramsey_witness(er(3), 1, 9));
}

TEST_CASE("certify_lower_bound examples") {
  const auto c3 = certify_lower_bound(er(3), 1);
  CHECK(c3.order == 13);
  CHECK(c3.min_degree == 3);
  CHECK(c3.guaranteed_book_free_n == 10);
  CHECK(c3.implied_bound == "r(C4,B_10^(1)) >= 14");
  CHECK(c3.c4_free);
  CHECK(c3.cross_checked_nmax == std::optional<std::size_t>{9});
  CHECK(c3.graph6 == g6_encode(er(3)));
  CHECK(c3.graph_hash.size() == 64);

  const auto c2 = certify_lower_bound(er(2), 1);
  CHECK(c2.order == 7);
  CHECK(c2.min_degree == 2);
  CHECK(c2.guaranteed_book_free_n == 5);

  try {
    (void)certify_lower_bound(named::cycle(4), 1);
    FAIL("expected NotC4Free");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotC4Free);
  }
}

TEST_CASE("certificate on a 69-vertex subgraph of ER_8") {
  const Graph g = er(8);
  const auto keep = greedy_min_degree_subgraph(g, 69, 8, 10'000'000);
  REQUIRE(keep.has_value());
  const Graph h = induced_subgraph(g, *keep);
  const auto cert = certify_lower_bound(h, 3, "induced subgraph of ER_8");
  CHECK(cert.order == 69);
  CHECK(cert.min_degree == 8);
  CHECK(cert.guaranteed_book_free_n == 46);
  CHECK(cert.implied_bound == "r(C4,B_46^(3)) >= 70");
  REQUIRE(cert.cross_checked_nmax.has_value());
  CHECK(*cert.cross_checked_nmax <= 45);
}

TEST_CASE("certificate is sound on random C4-free graphs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> order(2, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_c4_free(order(rng), 0.3, rng);
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 3;
    if (k > g.order()) continue;
    const auto cert = certify_lower_bound(g, k);
    const auto b = complement_book_number(g, k);
    if (b.has_spine) REQUIRE(static_cast<std::int64_t>(b.nmax) <= cert.guaranteed_book_free_n - 1);
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto cert = certify_lower_bound(er(q), k);
      if (cert.cross_checked_nmax) CHECK(static_cast<std::int64_t>(*cert.cross_checked_nmax) <= cert.guaranteed_book_free_n - 1);
    }
  }
}

TEST_CASE("find_admissible_sets") {
  const Graph g5 = er(5);
  const auto abs = geometry::absolute_points(gf::Field(5, 1));
  Vertex v = 0;
  while (std::find(abs.begin(), abs.end(), v) != abs.end()) ++v;
  const auto sets = find_admissible_sets(g5, v, 2, 5, 200);
  CHECK_FALSE(sets.empty());
  for (const auto& s : sets) {
    REQUIRE(s.size() == 2);
    CHECK_FALSE(g5.adjacent(s[0], s[1]));
    CHECK(g5.degree(s[0]) <= 5);
    CHECK(g5.degree(s[1]) <= 5);
  }
  const Graph star = named::star(4);
  CHECK(find_admissible_sets(star, 0, 2, 10, 100).empty());
  // k = 1 returns singletons from the punctured neighbourhoods.
  const auto singles = find_admissible_sets(g5, v, 1, 100, 1000);
  for (const auto& s : singles) {
    REQUIRE(s.size() == 1);
    CHECK(s[0] != v);
    CHECK_FALSE(g5.adjacent(s[0], v));
    CHECK(common_count(g5, s[0], v) == 1);
  }
}

TEST_CASE("admissible sets satisfy every defining property") {
  for (std::uint64_t q : {3, 4, 5, 7}) {
    const Graph g = er(q);
    for (Vertex v = 0; v < g.order(); v += 3) {
      for (std::size_t k = 2; k <= 4; ++k) {
        const auto sets = find_admissible_sets(g, v, k, q, 50);
        for (const auto& s : sets) {
          REQUIRE(s.size() == k);
          REQUIRE(std::is_sorted(s.begin(), s.end()));
          std::vector<Vertex> hubs;
          for (Vertex x : s) {
            REQUIRE(g.degree(x) <= q);
            REQUIRE(x != v);
            REQUIRE_FALSE(g.adjacent(x, v));
            // x lies in A_i for the unique neighbour v_i of v adjacent to x.
            Vertex hub = g.order();
            for (Vertex w = 0; w < g.order(); ++w) {
              if (g.adjacent(v, w) && g.adjacent(x, w)) hub = w;
            }
            REQUIRE(hub != g.order());
            hubs.push_back(hub);
          }
          std::sort(hubs.begin(), hubs.end());
          REQUIRE(std::adjacent_find(hubs.begin(), hubs.end()) == hubs.end());
          for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
              REQUIRE_FALSE(g.adjacent(s[a], s[b]));
              for (std::size_t c = b + 1; c < k; ++c) {
                for (Vertex w = 0; w < g.order(); ++w) {
                  REQUIRE_FALSE((g.adjacent(s[a], w) && g.adjacent(s[b], w) && g.adjacent(s[c], w)));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("good_pairs") {
  CHECK(good_pairs(named::matching(2), 1).count == 6);
  CHECK(good_pairs(named::cycle(5), 2).count == 5);
  const auto star = good_pairs(named::star(3), 3);
  CHECK(star.count == 3);
  CHECK(star.sample.front() == std::pair<Vertex, Vertex>{0, 1});
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 15, 0.3, rng);
    CHECK(good_pairs(g, g.order()).count == non_two_path_pairs(g));
    CHECK(good_pairs(g, 2).count <= non_two_path_pairs(g));
  }
}

// An admissible k-set without a good pair has pairwise one common
// neighbour, so its members see at most k*deg_cap - C(k,2) vertices and the
// rest, at least N - k - k*deg_cap + C(k,2) vertices, are pages of a book in
// the complement.
TEST_CASE("admissible sets without a good pair span a large complement book") {
  std::size_t sets_checked = 0;
  std::size_t without_good_pair = 0;
  std::size_t in_certificate_regime = 0;
  for (std::uint64_t q : {4, 5, 7, 8}) {
    const Graph full = er(q);
    const auto keep = greedy_min_degree_subgraph(full, q * q + q, q, 10'000'000);
    REQUIRE(keep.has_value());
    const Graph g = induced_subgraph(full, *keep);
    const std::size_t n_vertices = g.order();
    for (std::size_t k = 3; k <= 4; ++k) {
      const auto cert = certify_lower_bound(g, k);
      const bool witness = is_ramsey_witness(g, k, cert.guaranteed_book_free_n);
      const std::int64_t floor_pages = static_cast<std::int64_t>(n_vertices - k - k * q + k * (k - 1) / 2);
      for (Vertex v = 0; v < n_vertices; ++v) {
        for (const auto& s : find_admissible_sets(g, v, k, q, 20)) {
          ++sets_checked;
          bool good = false;
          for (std::size_t a = 0; a < k && !good; ++a) {
            for (std::size_t b = a + 1; b < k && !good; ++b) good = common_count(g, s[a], s[b]) == 0;
          }
          if (good) continue;
          ++without_good_pair;
          if (witness) ++in_certificate_regime;
          std::int64_t pages = 0;
          for (Vertex y = 0; y < n_vertices; ++y) {
            bool outside = true;
            for (Vertex x : s) outside = outside && y != x && !g.adjacent(x, y);
            pages += outside ? 1 : 0;
          }
          REQUIRE(pages >= floor_pages);
          // Such a set is a spine with fewer than n* pages.
          REQUIRE(pages <= cert.guaranteed_book_free_n - 1);
        }
      }
    }
  }
  MESSAGE("sets=" << sets_checked << " without good pair=" << without_good_pair
                  << " of which in graphs with complement free of B_{n*}=" << in_certificate_regime);
  CHECK(sets_checked > 0);
}
