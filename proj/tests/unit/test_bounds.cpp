#include <doctest.h>

#include <cmath>

#include "c4book/bounds.hpp"
#include "c4book/error.hpp"
#include "oracle/naive.hpp"

using namespace c4book;
using namespace c4book::bounds;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::InternalInconsistency;
}

std::int64_t naive_isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/10") == Rational(3, 10));
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(code_of([] { (void)parse_rational("x"); }) == Errc::DomainError);
  CHECK(code_of([] { (void)parse_rational("1/0"); }) == Errc::DomainError);
}

TEST_CASE("parsons_upper") {
  CHECK(parsons_upper(4) == 7);
  CHECK(parsons_upper(10) == 14);
  // n = 2 = 1^2 + 1 takes the perfect-square branch.
  CHECK(parsons_upper(2) == 4);
  CHECK(parsons_upper(3) == 6);
  CHECK(code_of([] { (void)parsons_upper(1); }) == Errc::DomainError);
}

TEST_CASE("parsons upper bound agrees with brute force for n = 2, 4") {
  CHECK(oracle::ramsey_number(1, 2, 6) == static_cast<std::size_t>(parsons_upper(2)));
  CHECK(oracle::ramsey_number(1, 4, 7) == static_cast<std::size_t>(parsons_upper(4)));
}

TEST_CASE("g_sequence") {
  CHECK(g_sequence(10, 3).values == std::vector<std::int64_t>{10, 15, 20, 26});
  const auto s = g_sequence(10, 3);
  CHECK(s.caps.back() == 28);
  CHECK(s.cap_violations.empty());
  CHECK(g_sequence(2, 1).values == std::vector<std::int64_t>{2, 5});
  CHECK(g_sequence(7, 0).values == std::vector<std::int64_t>{7});
  CHECK(code_of([] { (void)g_sequence(1, 1); }) == Errc::DomainError);
  // Known violation of the closed-form cap.
  const auto v = g_sequence(2, 8);
  CHECK(v.values[8] == 45);
  CHECK(v.caps[8] == 44);
  CHECK(v.cap_violations == std::vector<int>{8});
}

TEST_CASE("one recurrence step is the general k = 1 bound") {
  for (std::int64_t n = 2; n <= 1000000; ++n) {
    const std::int64_t s = isqrt(static_cast<std::uint64_t>(n - 1));
    if (g_step(n) != n + s + 2) {
      FAIL("mismatch at n = " << n);
    }
  }
  for (std::int64_t n = 2; n <= 5000; ++n) REQUIRE(static_cast<std::int64_t>(isqrt(n)) == naive_isqrt(n));
  CHECK(isqrt(std::uint64_t{1} << 62) == (std::uint64_t{1} << 31));
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
}

TEST_CASE("bounds_params") {
  const auto p = bounds_params(3, 10, 2, Rational(1, 2));
  CHECK(p.a_k == 0);
  CHECK(p.b_k == 0);
  CHECK(p.n == 72);
  CHECK(p.ladder == std::vector<std::int64_t>{82, 93, 102});
  const auto p4 = bounds_params(4, 10, 0, Rational(1, 2));
  CHECK(p4.a_k == 2);
  CHECK(p4.b_k == 2);
  CHECK(p4.n == 62);
  for (int k = 3; k <= 8; ++k) {
    for (const Rational& eps : {Rational(1, 2), Rational(3, 10), Rational(1, 1000)}) {
      const auto params = bounds_params(k, 20, 3, eps);
      Rational lhs = params.Q;
      for (int i = 0; i < 2 * k; ++i) lhs *= eps;
      BigInt base = 320;
      for (int i = 0; i < 4; ++i) base *= k;
      BigInt rhs = 1;
      for (int i = 0; i < k + 1; ++i) rhs *= base;
      CHECK(lhs == Rational(rhs));
      CHECK_FALSE(params.q_at_least_Q);
    }
  }
  CHECK(bounds_params(3, 10, 5, Rational(1, 2)).t_in_range);
  CHECK_FALSE(bounds_params(3, 10, 6, Rational(1, 2)).t_in_range);
  CHECK_FALSE(bounds_params(3, 10, -1, Rational(1, 2)).t_in_range);
  CHECK(code_of([] { (void)bounds_params(3, 10, 0, Rational(0)); }) == Errc::DomainError);
  CHECK(code_of([] { (void)bounds_params(3, 10, 0, Rational(1)); }) == Errc::DomainError);
}

TEST_CASE("ladder gaps") {
  for (int k = 3; k <= 8; ++k) {
    for (std::int64_t q = 10; q <= 100; ++q) {
      for (std::int64_t t = 0; t <= q; ++t) {
        const auto p = bounds_params(k, q, t, Rational(1, 2));
        const auto& N = p.ladder;
        REQUIRE(N.size() == static_cast<std::size_t>(k));
        REQUIRE(N[k - 1] == q * q + t);
        REQUIRE(N[k - 1] - N[k - 2] == q - p.b_k - 1);
        REQUIRE(N[k - 2] - N[k - 3] == q + 1);
        for (int i = 1; i + 2 < k; ++i) REQUIRE(N[i] - N[i - 1] == q);
        if (q > p.b_k + 1) REQUIRE(std::is_sorted(N.begin(), N.end()));
      }
    }
  }
}

TEST_CASE("exact value admissibility") {
  const Rational eps(3, 10);
  CHECK_FALSE(exact_value_admissible(3, 8, 1, eps).admissible);
  CHECK(exact_value_admissible(3, 8, 5, eps).admissible);
  CHECK_FALSE(exact_value_admissible(3, 8, 6, eps).admissible);  // 6 > 5.6
  CHECK(exact_value_admissible(3, 8, 0, eps).admissible);
  CHECK_FALSE(exact_value_admissible(3, 7, 5, eps).admissible);
  CHECK(exact_value_admissible(3, 7, 4, eps).admissible);
  CHECK_FALSE(exact_value_admissible(3, 7, 3, eps).admissible);
  CHECK(exact_value_admissible(3, 5, 2, Rational(1, 5)).admissible);
  CHECK_FALSE(exact_value_admissible(3, 5, 3, Rational(1, 5)).admissible);
  CHECK_FALSE(exact_value_admissible(3, 5, 1, Rational(1, 5)).admissible);
  CHECK(code_of([&] { (void)exact_value_admissible(3, 6, 1, eps); }) == Errc::NotPrimePower);
  CHECK_FALSE(exact_value_admissible(3, 8, 1, eps).reason.empty());
}

TEST_CASE("floor of sqrt(n) - c n^alpha") {
  // 10^6: sqrt = 1000, 6 * 10^1.575 = 225.45...
  const auto big = floor_sqrt_minus_power(1000000, kDefaultC, kDefaultAlpha);
  CHECK(big.value == 774);
  CHECK_FALSE(big.exact);
  // Integral radicals: sqrt(16) - 1 * 16^(1/4) = 4 - 2.
  const auto exact = floor_sqrt_minus_power(16, Rational(1), Rational(1, 4));
  CHECK(exact.value == 2);
  CHECK(exact.exact);
  const auto negative = floor_sqrt_minus_power(100, kDefaultC, kDefaultAlpha);
  CHECK(negative.value < 0);
  // Cross-check against long double away from integers.
  for (std::uint64_t n : {2000ULL, 12345ULL, 999999ULL, 123456789ULL}) {
    const long double x = std::sqrt(static_cast<long double>(n)) - 6.0L * std::pow(static_cast<long double>(n), 0.2625L);
    CHECK(floor_sqrt_minus_power(n, kDefaultC, kDefaultAlpha).value == static_cast<std::int64_t>(std::floor(x)));
  }
}

TEST_CASE("regime threshold") {
  const std::uint64_t min_n = min_n_positive_floor(kDefaultC, kDefaultAlpha);
  REQUIRE(min_n > 1);
  CHECK(floor_sqrt_minus_power(min_n, kDefaultC, kDefaultAlpha).value >= 1);
  CHECK(floor_sqrt_minus_power(min_n - 1, kDefaultC, kDefaultAlpha).value < 1);
}

TEST_CASE("asymptotic lower bound") {
  const auto r = asymptotic_lower_bound(1000000, 3);
  CHECK(r.regime_reached);
  CHECK(r.floor_term == 774);
  CHECK(r.value == 1002322);
  const auto small = asymptotic_lower_bound(100, 2);
  CHECK_FALSE(small.regime_reached);
  CHECK(small.value == 102);
  CHECK(asymptotic_lower_bound(1000000, 0).value == 1000000);
  // -k^2/2 + 3k/2 = k(3-k)/2 is an integer for every k.
  CHECK(asymptotic_lower_bound(1000000, 4).value == 1000000 + 4 * 774 - 2);
}

TEST_CASE("bound_report examples") {
  const auto a = bound_report(3, 2);
  CHECK(a.exact == std::optional<std::int64_t>{9});
  const auto b = bound_report(13, 2);
  CHECK(b.exact == std::optional<std::int64_t>{22});
  const auto c = bound_report(9, 1);
  CHECK(c.exact == std::optional<std::int64_t>{13});
  CHECK(bound_report(4, 1).exact == std::optional<std::int64_t>{7});
  CHECK(bound_report(10, 1).exact == std::optional<std::int64_t>{14});
  CHECK(bound_report(2, 1).upper.value == 4);
  CHECK_FALSE(a.lower.provenance.empty());
  CHECK_FALSE(a.upper.provenance.empty());
}

TEST_CASE("bound_report lower <= upper over a sweep") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const auto r = bound_report(n, k);
      if (r.lower.value > r.upper.value) FAIL("n=" << n << " k=" << k);
      if (r.exact) REQUIRE(*r.exact == r.lower.value);
      if (r.exact) REQUIRE(*r.exact == r.upper.value);
    }
  }
}

TEST_CASE("predicted table") {
  const auto rows = predicted_table(2, 9, 3, Rational(3, 10));
  REQUIRE_FALSE(rows.empty());
  for (const auto& row : rows) {
    CHECK(row.value == row.q * row.q + row.t);
    CHECK(row.n == row.q * row.q - 3 * row.q + row.t);
    CHECK(exact_value_admissible(3, row.q, row.t, Rational(3, 10)).admissible);
  }
}
