#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4book/bounds.hpp"
#include "c4book/graph.hpp"
#include "c4book/ramsey.hpp"

namespace c4book {

struct DeletionOverrides {
  std::optional<std::int64_t> m;
  std::optional<bounds::Rational> c;
  std::optional<bounds::Rational> alpha;
  std::uint64_t max_attempts = 1000;
  unsigned jobs = 1;
};

struct DeletionRun {
  std::int64_t n = 0;
  std::size_t k = 0;
  bounds::Rational alpha;
  bounds::Rational c;
  bool m_overridden = false;
  std::uint64_t p = 0;
  std::uint64_t N = 0;
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::uint64_t seed = 0;
  /// Attempts up to and including the successful one.
  std::uint64_t attempts = 0;
  std::vector<Vertex> deleted;  // sorted, indices into ER_p
  std::string graph_hash;
  std::string prime_note;
};

struct DeletionResult {
  Graph graph;
  DeletionRun run;
  LowerBoundCertificate certificate;
};

/// Smallest prime p with p >= sqrt(n) + 1/2, i.e. p(p-1) >= n - 1/4.
std::uint64_t smallest_prime_above_sqrt(std::int64_t n);

/// Deletes uniformly random d-subsets of ER_p until every surviving vertex
/// has degree >= m, with d = N - (n + mk - k^2/2 + 3k/2 - 1). Attempt i
/// draws from a generator seeded by (seed, i); the smallest successful
/// index wins, so the result does not depend on jobs.
/// Errors: DomainError for k = 0, d < 0 or an overridden m < 1;
/// RegimeError (AsymptoticRegimeNotReached) when the default m < 1;
/// AttemptsExhausted after max_attempts failures.
DeletionResult random_delete_construction(std::int64_t n, std::size_t k, std::uint64_t seed,
                                          const DeletionOverrides& overrides = {});

}  // namespace c4book
