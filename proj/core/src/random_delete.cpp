#include "c4book/random_delete.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

#include "c4book/digest.hpp"
#include "c4book/error.hpp"
#include "c4book/geometry.hpp"
#include "c4book/gf.hpp"
#include "parallel.hpp"

namespace c4book {

std::uint64_t smallest_prime_above_sqrt(std::int64_t n) {
  if (n < 1) throw Error(Errc::DomainError, "n must be positive");
  std::uint64_t p = 2;
  while (p * (p - 1) < static_cast<std::uint64_t>(n) || !gf::is_prime(p)) ++p;
  return p;
}

namespace {

std::vector<Vertex> draw_deletion(std::uint64_t seed, std::uint64_t attempt, std::size_t order, std::size_t d) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Vertex> pool(order);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < d; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(d);
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool survivors_reach(const Graph& g, const std::vector<Vertex>& deleted, std::size_t m) {
  Bitset gone(g.order());
  for (Vertex v : deleted) gone.set(v);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gone.test(v)) continue;
    if (g.degree(v) - intersection_count(g.neighbors(v), gone) < m) return false;
  }
  return true;
}

}  // namespace

DeletionResult random_delete_construction(std::int64_t n, std::size_t k, std::uint64_t seed,
                                          const DeletionOverrides& overrides) {
  if (k == 0) throw Error(Errc::DomainError, "spine size must be positive");
  if (n < 1) throw Error(Errc::DomainError, "n must be positive");

  DeletionRun run;
  run.n = n;
  run.k = k;
  run.alpha = overrides.alpha.value_or(bounds::kDefaultAlpha);
  run.c = overrides.c.value_or(bounds::kDefaultC);
  run.seed = seed;
  if (overrides.m) {
    if (*overrides.m < 1) throw Error(Errc::DomainError, "degree floor m must be at least 1");
    run.m = *overrides.m;
    run.m_overridden = true;
  } else {
    run.m = bounds::floor_sqrt_minus_power(static_cast<std::uint64_t>(n), run.c, run.alpha).value;
    if (run.m < 1) {
      const std::uint64_t min_n = bounds::min_n_positive_floor(run.c, run.alpha);
      throw RegimeError(min_n, "floor(sqrt(n) - " + bounds::to_string(run.c) + " n^" + bounds::to_string(run.alpha) +
                                   ") = " + std::to_string(run.m) + " < 1 at n = " + std::to_string(n) +
                                   "; the default constants need n >= " + std::to_string(min_n));
    }
  }

  run.p = smallest_prime_above_sqrt(n);
  run.N = run.p * run.p + run.p + 1;
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t kept = n + run.m * kk + kk * (3 - kk) / 2 - 1;
  run.d = static_cast<std::int64_t>(run.N) - kept;
  if (run.d < 0) {
    throw Error(Errc::DomainError, "deletion count d = " + std::to_string(run.d) + " is negative for m = " +
                                       std::to_string(run.m));
  }
  run.prime_note = "p = " + std::to_string(run.p) +
                   " is the smallest prime with p >= sqrt(n) + 1/2; a prime lies in (x, x + x^0.525] for large x";

  const gf::Field field(run.p, 1);
  const Graph er = geometry::er_graph(field);
  const auto d = static_cast<std::size_t>(run.d);
  const auto m = static_cast<std::size_t>(run.m);

  const std::uint64_t batch = std::max<std::uint64_t>(1, overrides.jobs) * 8;
  std::optional<std::uint64_t> success;
  for (std::uint64_t start = 0; start < overrides.max_attempts && !success; start += batch) {
    const std::uint64_t count = std::min(batch, overrides.max_attempts - start);
    std::vector<char> ok(count, 0);
    detail::parallel_for(count, overrides.jobs, [&](std::size_t i) {
      ok[i] = survivors_reach(er, draw_deletion(seed, start + i, er.order(), d), m) ? 1 : 0;
    });
    for (std::uint64_t i = 0; i < count; ++i) {
      if (ok[i] != 0) {
        success = start + i;
        break;
      }
    }
  }
  if (!success) {
    throw Error(Errc::AttemptsExhausted, "no deletion of " + std::to_string(d) + " vertices left minimum degree " +
                                             std::to_string(m) + " within " + std::to_string(overrides.max_attempts) +
                                             " attempts");
  }
  run.attempts = *success + 1;
  run.deleted = draw_deletion(seed, *success, er.order(), d);

  std::vector<Vertex> keep;
  keep.reserve(er.order() - d);
  for (Vertex v = 0, j = 0; v < er.order(); ++v) {
    if (j < run.deleted.size() && run.deleted[j] == v) {
      ++j;
    } else {
      keep.push_back(v);
    }
  }
  DeletionResult out{induced_subgraph(er, keep), run, {}};
  out.run.graph_hash = graph_digest(out.graph);

  std::string note = "induced subgraph of ER_" + std::to_string(run.p) + " after deleting vertices [";
  for (std::size_t i = 0; i < run.deleted.size(); ++i) note += (i ? "," : "") + std::to_string(run.deleted[i]);
  note += "]";
  out.certificate = certify_lower_bound(out.graph, k, std::move(note), overrides.jobs);
  return out;
}

}  // namespace c4book
