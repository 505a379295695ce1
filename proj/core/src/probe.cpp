#include "c4book/probe.hpp"

#include <cmath>
#include <random>

#include "c4book/canon.hpp"
#include "c4book/error.hpp"
#include "c4book/geometry.hpp"
#include "c4book/gf.hpp"
#include "c4book/ramsey.hpp"

namespace c4book {

namespace {

constexpr std::uint64_t kEpochSteps = 200000;
constexpr double kHot = 2.0;
constexpr double kCold = 0.05;

class Annealer {
 public:
  Annealer(SmallGraph start, std::size_t threshold) : g_(start), n_(start.order()), threshold_(threshold) {
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) sum += pair_cost(u, v);
    }
    return sum;
  }

  // Cost of every pair touching a or b.
  std::uint64_t local(std::size_t a, std::size_t b) const {
    std::uint64_t sum = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x != a) sum += pair_cost(a, x);
      if (x != a && x != b) sum += pair_cost(b, x);
    }
    return sum;
  }

  bool safe_to_add(std::size_t a, std::size_t b) const {
    for (std::uint64_t r = g_.row(a); r != 0; r &= r - 1) {
      if ((g_.row(static_cast<std::size_t>(std::countr_zero(r))) & g_.row(b)) != 0) return false;
    }
    return true;
  }

  void toggle(std::size_t a, std::size_t b) {
    if (g_.adjacent(a, b)) {
      g_.remove_edge(a, b);
    } else {
      g_.add_edge(a, b);
    }
  }

  const SmallGraph& graph() const { return g_; }

 private:
  std::uint64_t pair_cost(std::size_t u, std::size_t v) const {
    if (g_.adjacent(u, v)) return 0;
    const std::uint64_t outside = ~(g_.row(u) | g_.row(v)) & all_ & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
    const auto common = static_cast<std::size_t>(std::popcount(outside));
    return common > threshold_ ? common - threshold_ : 0;
  }

  SmallGraph g_;
  std::size_t n_;
  std::size_t threshold_;
  std::uint64_t all_ = 0;
};

}  // namespace

std::optional<Graph> probe_gq(std::uint64_t q, std::uint64_t budget, std::uint64_t seed, ProbeStats* stats) {
  gf::PrimePower pp{};
  if (!gf::prime_power(q, pp)) throw Error(Errc::DomainError, std::to_string(q) + " is not a prime power");
  const std::uint64_t order = q * q + q + 3;
  if (order > SmallGraph::kMaxOrder) throw Error(Errc::DomainError, "probe supports q^2+q+3 <= 64 only");
  const auto n = static_cast<std::int64_t>(q * q - q + 1);
  const auto threshold = static_cast<std::size_t>(n - 1);

  const Graph er = geometry::er_graph(gf::Field(pp.p, pp.e));
  SmallGraph start(order);
  for (const auto& [u, v] : er.edges()) start.add_edge(u, v);

  ProbeStats local;
  ProbeStats& st = stats != nullptr ? *stats : local;
  st = {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> vertex(0, order - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Annealer best_state(start, threshold);
  st.best_objective = best_state.total();

  while (st.steps < budget) {
    Annealer state(start, threshold);
    std::uint64_t cost = state.total();
    ++st.restarts;
    for (std::uint64_t step = 0; step < kEpochSteps && st.steps < budget; ++step, ++st.steps) {
      if (cost == 0) break;
      const std::size_t a = vertex(rng);
      const std::size_t b = vertex(rng);
      if (a == b) continue;
      if (!state.graph().adjacent(a, b) && !state.safe_to_add(a, b)) continue;
      const std::uint64_t before = state.local(a, b);
      state.toggle(a, b);
      const std::uint64_t after = state.local(a, b);
      const double temperature = kHot * std::pow(kCold / kHot, static_cast<double>(step) / kEpochSteps);
      if (after <= before || unit(rng) < std::exp(-static_cast<double>(after - before) / temperature)) {
        cost = cost + after - before;
      } else {
        state.toggle(a, b);
      }
      st.best_objective = std::min(st.best_objective, cost);
    }
    if (cost == 0) {
      Graph found = state.graph().to_graph();
      if (!is_ramsey_witness(found, 2, n)) {
        throw Error(Errc::InternalInconsistency, "probe produced a graph that fails re-verification");
      }
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace c4book
