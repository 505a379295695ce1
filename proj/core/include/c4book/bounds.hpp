#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace c4book::bounds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/10", "0.3", "7" or "2.5e-1" into an exact rational.
/// DomainError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" (or "num" when integral).
std::string to_string(const Rational& value);

std::uint64_t isqrt(std::uint64_t n) noexcept;

/// n + floor(sqrt(n-1)) + 2, lowered by one when n-1 is a perfect square.
/// DomainError for n < 2.
std::int64_t parsons_upper(std::int64_t n);

/// One step of the recurrence: n + floor(sqrt(n-1)) + 2.
std::int64_t g_step(std::int64_t n);

/// ceil(n + k*floor(sqrt n) + (k^2+9k)/4).
std::int64_t g_cap(std::int64_t n, int k);

struct GSequence {
  std::vector<std::int64_t> values;  // g_0(n) .. g_k(n)
  std::vector<std::int64_t> caps;    // g_cap(n, i) for i = 0..k
  /// Indices i with values[i] > caps[i]. The closed-form cap is a rough
  /// estimate and is violated for some (n, k), e.g. n = 2, k = 8.
  std::vector<int> cap_violations;
};

/// DomainError for n < 2 or k < 0.
GSequence g_sequence(std::int64_t n, int k);

/// Parameter ladder for a spine of size k >= 3 with q, t and 0 < eps < 1.
struct BoundsParams {
  int k = 0;
  std::int64_t q = 0;
  std::int64_t t = 0;
  Rational eps;

  std::int64_t a_k = 0;            // C(k,2) - k
  std::int64_t b_k = 0;            // a_k - ceil(k/2) + 2
  std::int64_t n = 0;              // q^2 - kq + t + a_k
  std::vector<std::int64_t> ladder;  // N_1 .. N_k
  Rational Q;                      // (320 k^4)^(k+1) / eps^(2k)
  bool q_at_least_Q = false;
  bool t_in_range = false;         // 0 <= t <= (1 - eps) q
};

BoundsParams bounds_params(int k, std::int64_t q, std::int64_t t, const Rational& eps);

struct Admissibility {
  bool admissible = false;
  std::string reason;
};

/// Whether (q, t) lies in the parameter range where r(C4, B_n^(k)) = q^2 + t
/// is claimed, n = q^2 - kq + t + a_k. Ignores the q >= Q(k, eps)
/// hypothesis. NotPrimePower if q is not a prime power.
Admissibility exact_value_admissible(int k, std::int64_t q, std::int64_t t, const Rational& eps);

/// floor(sqrt(n) - c * n^alpha), evaluated at 100 significant digits and
/// cross-checked at 50; exact when both radicals are integral.
struct FloorEvaluation {
  std::int64_t value = 0;
  bool exact = false;
};
FloorEvaluation floor_sqrt_minus_power(std::uint64_t n, const Rational& c, const Rational& alpha);

/// Smallest n with floor(sqrt(n) - c n^alpha) >= 1, or 0 if none below 2^62.
std::uint64_t min_n_positive_floor(const Rational& c, const Rational& alpha);

inline const Rational kDefaultAlpha{21, 80};  // 0.2625
inline const Rational kDefaultC{6};

struct AsymptoticLower {
  std::int64_t value = 0;       // n + k*floor_term - k^2/2 + 3k/2, or n + k
  std::int64_t floor_term = 0;  // floor(sqrt(n) - 6 n^0.2625)
  bool regime_reached = false;  // floor_term >= 1
};

/// General lower bound valid for sufficiently large n. When floor_term < 1
/// the trivial n + k is returned and regime_reached is false.
AsymptoticLower asymptotic_lower_bound(std::int64_t n, int k);

struct Bound {
  std::int64_t value = 0;
  std::string provenance;
};

struct BoundReport {
  std::int64_t n = 0;
  int k = 0;
  Bound lower;
  Bound upper;
  std::optional<std::int64_t> exact;
  AsymptoticLower asymptotic;  // informational; never used for `lower`
};

/// Best known lower and upper bounds for r(C4, B_n^(k)), n >= 1, k >= 1.
BoundReport bound_report(std::int64_t n, int k);

/// Predicted exact values q^2 + t over admissible (q, t), q prime power in
/// [q_min, q_max].
struct PredictedValue {
  std::int64_t q = 0;
  std::int64_t t = 0;
  std::int64_t n = 0;
  std::int64_t value = 0;
};
std::vector<PredictedValue> predicted_table(std::int64_t q_min, std::int64_t q_max, int k, const Rational& eps);

}  // namespace c4book::bounds
