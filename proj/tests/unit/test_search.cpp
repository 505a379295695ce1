#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "c4book/canon.hpp"
#include "c4book/digest.hpp"
#include "c4book/enumerate.hpp"
#include "c4book/error.hpp"
#include "c4book/geometry.hpp"
#include "c4book/graph6.hpp"
#include "c4book/named_graphs.hpp"
#include "c4book/probe.hpp"
#include "c4book/random_delete.hpp"
#include "c4book/subgraph_search.hpp"
#include "oracle/naive.hpp"

using namespace c4book;

namespace {

Graph er(std::uint64_t q) {
  gf::PrimePower pp{};
  REQUIRE(gf::prime_power(q, pp));
  return geometry::er_graph(gf::Field(static_cast<gf::Residue>(pp.p), pp.e));
}

std::vector<SmallGraph> collect(std::size_t order, bool c4_free, unsigned jobs = 1, std::size_t split = 0) {
  std::vector<SmallGraph> out;
  std::mutex mu;
  EnumerateOptions opt;
  opt.c4_free = c4_free;
  opt.jobs = jobs;
  opt.split_depth = split;
  enumerate_graphs(order, nullptr, [&](const SmallGraph& g) {
    std::lock_guard lock(mu);
    out.push_back(g);
    return false;
  }, opt);
  return out;
}

std::uint64_t mask_of(const SmallGraph& g) {
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j, ++bit) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

// Smallest edge mask over all relabellings, as the oracle keys classes.
std::uint64_t oracle_key(const SmallGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t image = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if (g.adjacent(perm[i], perm[j])) image |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SmallGraph shuffled(const SmallGraph& g, std::mt19937_64& rng) {
  std::vector<std::uint8_t> lab(g.order());
  std::iota(lab.begin(), lab.end(), 0);
  std::shuffle(lab.begin(), lab.end(), rng);
  return relabel(g, lab);
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 20;
    const SmallGraph g = SmallGraph::from_graph(oracle::random_graph(n, 0.1 + 0.002 * trial, rng));
    const auto a = canonical_labeling(g);
    const SmallGraph h = shuffled(g, rng);
    const auto b = canonical_labeling(h);
    REQUIRE(a.form == b.form);
    REQUIRE(relabel(g, a.lab) == relabel(h, b.lab));
    // Last canonical position holds a vertex of maximum degree.
    if (n > 0) REQUIRE(g.degree(a.lab.back()) == g.max_degree());
  }
  // Highly symmetric cases.
  for (const Graph& g : {er(2), er(3), named::petersen(), named::cycle(12), named::complete(7), named::empty(9)}) {
    const SmallGraph s = SmallGraph::from_graph(g);
    const auto base = canonical_labeling(s).form;
    for (int i = 0; i < 20; ++i) REQUIRE(canonical_labeling(shuffled(s, rng)).form == base);
  }
}

TEST_CASE("automorphism orbits of symmetric graphs") {
  const auto pet = canonical_labeling(SmallGraph::from_graph(named::petersen()));
  for (auto o : pet.orbit) CHECK(o == 0);
  const auto star = canonical_labeling(SmallGraph::from_graph(named::star(4)));
  CHECK(star.orbit[0] == 0);
  for (std::size_t v = 1; v < 5; ++v) CHECK(star.orbit[v] == 1);
  // ER_3: absolute points form one orbit; for odd q the other points split
  // into q(q-1)/2 internal and q(q+1)/2 external points.
  const auto abs = geometry::absolute_points(gf::Field(3, 1));
  const auto er3 = canonical_labeling(SmallGraph::from_graph(er(3)));
  std::set<std::uint8_t> abs_orbits;
  std::map<std::uint8_t, std::size_t> other_orbits;
  for (std::size_t v = 0; v < 13; ++v) {
    if (std::find(abs.begin(), abs.end(), v) != abs.end()) {
      abs_orbits.insert(er3.orbit[v]);
    } else {
      ++other_orbits[er3.orbit[v]];
    }
  }
  CHECK(abs_orbits.size() == 1);
  REQUIRE(other_orbits.size() == 2);
  std::multiset<std::size_t> sizes;
  for (const auto& [orbit, size] : other_orbits) sizes.insert(size);
  CHECK(sizes == std::multiset<std::size_t>{3, 6});
}

TEST_CASE("class counts for all graphs") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n <= 7; ++n) CHECK(collect(n, false).size() == expected[n]);
}

TEST_CASE("class counts for C4-free graphs") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 8, 18, 44, 117, 351, 1230};
  for (std::size_t n = 0; n <= 9; ++n) CHECK(collect(n, true).size() == expected[n]);
}

TEST_CASE("enumeration matches the brute-force classifier for N <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (bool c4 : {false, true}) {
      CAPTURE(n);
      CAPTURE(c4);
      const auto reference = oracle::classes(n, c4);
      std::set<std::uint64_t> keys;
      for (const auto& g : collect(n, c4)) {
        if (c4) REQUIRE(!oracle::has_c4(oracle::matrix_of(g.to_graph())));
        REQUIRE(keys.insert(oracle_key(g)).second);
      }
      CHECK(keys == reference);
    }
  }
  CHECK(oracle::classes(4, true).size() == 8);
  CHECK(oracle::classes(7, false).size() == 1044);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic and C4-free") {
  for (std::size_t n = 7; n <= 9; ++n) {
    std::set<std::vector<std::uint64_t>> forms;
    for (const auto& g : collect(n, true)) {
      REQUIRE(g.c4_free());
      REQUIRE(is_c4_free(g.to_graph()).c4_free);
      REQUIRE(forms.insert(canonical_labeling(g).form).second);
    }
  }
}

TEST_CASE("enumeration does not depend on jobs or split depth") {
  const auto sorted_masks = [](const std::vector<SmallGraph>& gs) {
    std::vector<std::uint64_t> out;
    for (const auto& g : gs) out.push_back(mask_of(g));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto base = sorted_masks(collect(9, true));
  CHECK(sorted_masks(collect(9, true, 3)) == base);
  CHECK(sorted_masks(collect(9, true, 2, 4)) == base);
  CHECK(sorted_masks(collect(9, true, 1, 7)) == base);
  const auto a = search_ramsey_exact(9, 2, 3, 1);
  const auto b = search_ramsey_exact(9, 2, 3, 4);
  CHECK(a.proof.graphs_examined == b.proof.graphs_examined);
  CHECK(a.proof.pruned == b.proof.pruned);
  const auto w1 = search_ramsey_exact(8, 2, 3, 1);
  const auto w4 = search_ramsey_exact(8, 2, 3, 4);
  REQUIRE(w1.witness.has_value());
  REQUIRE(w4.witness.has_value());
  CHECK(*w1.witness == *w4.witness);
  CHECK(w1.proof.graphs_examined == w4.proof.graphs_examined);
}

TEST_CASE("enumeration cap") {
  try {
    enumerate_c4_free(14, nullptr, [](const SmallGraph&) { return false; });
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("small exact values") {
  const auto seven = search_ramsey_exact(7, 1, 4);
  CHECK(seven.proof.all_rejected);
  CHECK_FALSE(seven.witness.has_value());
  CHECK(search_ramsey_exact(6, 1, 4).witness.has_value());
  const auto eight = search_ramsey_exact(8, 2, 3);
  REQUIRE(eight.witness.has_value());
  CHECK(is_ramsey_witness(*eight.witness, 2, 3));
  CHECK(eight.witness->order() == 8);
  const auto nine = search_ramsey_exact(9, 2, 3);
  CHECK(nine.proof.all_rejected);
  CHECK(nine.proof.generator_version == kGeneratorVersion);
  const auto nine_unpruned = search_ramsey_exact(9, 2, 3, 1, false);
  CHECK(nine_unpruned.proof.all_rejected);
  CHECK(nine_unpruned.proof.graphs_examined == 1230);
  CHECK(nine_unpruned.proof.pruned == 0);
  // r(C4, B_2^(1)) = 4.
  CHECK(search_ramsey_exact(3, 1, 2).witness.has_value());
  CHECK(search_ramsey_exact(4, 1, 2).proof.all_rejected);
}

TEST_CASE("the min-degree pruner never cuts a witness") {
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      for (std::size_t order = 2; order <= 9; ++order) {
        const auto pruned = search_ramsey_exact(order, k, n, 1, true);
        const auto full = search_ramsey_exact(order, k, n, 1, false);
        REQUIRE(pruned.witness.has_value() == full.witness.has_value());
      }
    }
  }
}

TEST_CASE("complement_has_book agrees with the book number") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.3, rng);
    const SmallGraph s = SmallGraph::from_graph(g);
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, g.order()); ++k) {
      const auto b = complement_book_number(g, k);
      for (std::int64_t n = 1; n <= 12; ++n) {
        const bool has = b.has_spine && static_cast<std::int64_t>(b.nmax) >= n;
        REQUIRE(complement_has_book(s, k, n) == has);
      }
    }
  }
}

TEST_CASE("friendship graphs are the only every-pair-one graphs up to 7 vertices") {
  std::vector<std::size_t> found;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : collect(n, false)) {
      const Graph full = g.to_graph();
      const bool pair_condition = oracle::every_pair_one_common(oracle::matrix_of(full));
      const auto k = is_friendship(full);
      REQUIRE(pair_condition == k.has_value());
      if (k) found.push_back(*k);
    }
  }
  CHECK(found == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("greedy_min_degree_subgraph examples") {
  const Graph g3 = er(3);
  const auto all = greedy_min_degree_subgraph(g3, 13, 3, 1000);
  REQUIRE(all.has_value());
  CHECK(all->size() == 13);

  const Graph g2 = er(2);
  const auto six = greedy_min_degree_subgraph(g2, 6, 2, 1000);
  REQUIRE(six.has_value());
  CHECK(six->size() == 6);
  CHECK(min_degree(induced_subgraph(g2, *six)) >= 2);
  // Brute force: which single deletions keep min degree 2?
  std::size_t good = 0;
  for (Vertex v = 0; v < 7; ++v) {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < 7; ++u) {
      if (u != v) keep.push_back(u);
    }
    good += min_degree(induced_subgraph(g2, keep)) >= 2 ? 1 : 0;
  }
  CHECK(good > 0);

  CHECK_FALSE(greedy_min_degree_subgraph(named::star(3), 3, 2, 1'000'000).has_value());
  CHECK_THROWS_AS(greedy_min_degree_subgraph(named::star(3), 5, 1, 100), Error);
}

TEST_CASE("greedy search reports budget exhaustion separately") {
  try {
    (void)greedy_min_degree_subgraph(er(8), 69, 8, 5);
    FAIL("expected BudgetExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExhausted);
  }
}

TEST_CASE("greedy results on ER_4 and ER_8") {
  for (std::uint64_t q : {4, 8}) {
    const Graph g = er(q);
    for (std::uint64_t t = 0; t <= q; ++t) {
      SubgraphSearchStats stats;
      const auto s = greedy_min_degree_subgraph(g, q * q + t - 1, q, 10'000'000, &stats);
      if (t == 1) {
        CHECK_FALSE(s.has_value());
        continue;
      }
      REQUIRE(s.has_value());
      CHECK(s->size() == q * q + t - 1);
      CHECK(min_degree(induced_subgraph(g, *s)) >= q);
    }
  }
}

TEST_CASE("prime selection") {
  CHECK(smallest_prime_above_sqrt(100) == 11);
  CHECK(smallest_prime_above_sqrt(1) == 2);
  CHECK(smallest_prime_above_sqrt(2) == 2);
  CHECK(smallest_prime_above_sqrt(3) == 3);
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const std::uint64_t p = smallest_prime_above_sqrt(n);
    const long double bound = std::sqrt(static_cast<long double>(n)) + 0.5L;
    REQUIRE(static_cast<long double>(p) >= bound);
    for (std::uint64_t r = 2; r < p; ++r) {
      if (gf::is_prime(r)) REQUIRE(static_cast<long double>(r) < bound);
    }
  }
}

TEST_CASE("random deletion construction") {
  DeletionOverrides o;
  o.m = 7;
  const auto r = random_delete_construction(100, 2, 1, o);
  CHECK(r.run.p == 11);
  CHECK(r.run.N == 133);
  CHECK(r.run.d == 19);
  CHECK(r.graph.order() == 114);
  CHECK(min_degree(r.graph) >= 7);
  CHECK(is_c4_free(r.graph).c4_free);
  CHECK(r.certificate.guaranteed_book_free_n >= 100);
  CHECK(r.run.deleted.size() == 19);
  CHECK(std::is_sorted(r.run.deleted.begin(), r.run.deleted.end()));
  CHECK(r.run.graph_hash == graph_digest(r.graph));

  // Same seed gives the same run for any number of jobs.
  o.jobs = 3;
  const auto again = random_delete_construction(100, 2, 1, o);
  CHECK(again.run.deleted == r.run.deleted);
  CHECK(again.run.attempts == r.run.attempts);
  CHECK(again.graph == r.graph);

  try {
    (void)random_delete_construction(100, 2, 1);
    FAIL("expected regime error");
  } catch (const RegimeError& e) {
    CHECK(e.code() == Errc::AsymptoticRegimeNotReached);
    CHECK(e.min_n() == bounds::min_n_positive_floor(bounds::kDefaultC, bounds::kDefaultAlpha));
  }
  CHECK_THROWS_AS(random_delete_construction(100, 0, 1, o), Error);
  DeletionOverrides impossible;
  impossible.m = 11;
  impossible.max_attempts = 5;
  try {
    (void)random_delete_construction(100, 2, 1, impossible);
    FAIL("expected AttemptsExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AttemptsExhausted);
  }
}

TEST_CASE("random deletion output has the predicted order for many seeds") {
  DeletionOverrides o;
  o.m = 7;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = random_delete_construction(100, 2, seed, o);
    CHECK(r.graph.order() == 114);
    CHECK(min_degree(r.graph) >= 7);
    CHECK(r.run.seed == seed);
  }
  o.m = 3;
  const auto k3 = random_delete_construction(60, 3, 9, o);
  // n + mk - k^2/2 + 3k/2 - 1 = 60 + 9 - 4.5 + 4.5 - 1.
  CHECK(k3.graph.order() == 68);
  CHECK(min_degree(k3.graph) >= 3);
  CHECK(k3.certificate.guaranteed_book_free_n >= 60);
}

TEST_CASE("probe finds a member for q = 3 and none for q = 2, 4") {
  ProbeStats stats;
  const auto three = probe_gq(3, 20'000'000, 2, &stats);
  REQUIRE(three.has_value());
  CHECK(three->order() == 15);
  CHECK(is_ramsey_witness(*three, 2, 7));
  CHECK_FALSE(probe_gq(2, 200'000, 1).has_value());
  CHECK_FALSE(probe_gq(4, 200'000, 1).has_value());
  CHECK_THROWS_AS(probe_gq(6, 10), Error);
  CHECK_THROWS_AS(probe_gq(8, 10), Error);  // 75 vertices
}
