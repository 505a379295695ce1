#include "c4book/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "c4book/error.hpp"
#include "c4book/gf.hpp"

namespace c4book::bounds {

namespace mp = boost::multiprecision;

namespace {

using F100 = mp::cpp_bin_float_100;
using F50 = mp::cpp_bin_float_50;

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt floor_of(const Rational& r) { return floor_div(mp::numerator(r), mp::denominator(r)); }

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::DomainError, "value does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

// Integer b-th root of n when n is a perfect b-th power.
std::optional<std::uint64_t> exact_root(std::uint64_t n, std::uint64_t b) {
  if (b == 1) return n;
  if (n <= 1) return n;
  const double guess = std::pow(static_cast<double>(n), 1.0 / static_cast<double>(b));
  const auto base = static_cast<std::uint64_t>(std::llround(guess));
  for (std::uint64_t r = base > 0 ? base - 1 : 0; r <= base + 1; ++r) {
    if (r < 2) continue;
    BigInt p = mp::pow(BigInt(r), static_cast<unsigned>(b));
    if (p == n) return r;
  }
  return std::nullopt;
}

template <class F>
F evaluate(std::uint64_t n, const Rational& c, const Rational& alpha) {
  const F nn(n);
  const F cc = F(mp::numerator(c)) / F(mp::denominator(c));
  const F aa = F(mp::numerator(alpha)) / F(mp::denominator(alpha));
  const F power = n == 0 ? F(0) : mp::pow(nn, aa);
  return mp::sqrt(nn) - cc * power;
}

bool is_prime_power(std::int64_t q) {
  gf::PrimePower pp{};
  return q >= 2 && gf::prime_power(static_cast<std::uint64_t>(q), pp);
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }
std::int64_t a_of(int k) { return choose2(k) - k; }

// Offset range of t for which a q^2 + t lower bound is available at spine k.
struct TRange {
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t excluded;
};

std::optional<TRange> lower_family_range(std::int64_t q, int k) {
  if (!is_prime_power(q)) return std::nullopt;
  const std::int64_t hi = k == 2 ? q - 1 : q;
  if (q % 2 == 0) {
    if (q < 4) return std::nullopt;
    return TRange{0, hi, 1};
  }
  if (q < 5) return std::nullopt;
  if (q % 4 == 3) return TRange{(q + 1) / 2, hi, (q + 3) / 2};
  return TRange{(q - 1) / 2, hi, (q + 1) / 2};
}

std::int64_t family_n(std::int64_t q, std::int64_t t, int k) { return q * q - k * q + t + a_of(k); }

struct Candidate {
  std::int64_t value;
  std::string provenance;
};

void keep_max(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.value > best->value) best = std::move(c);
}

void keep_min(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.value < best->value) best = std::move(c);
}

std::string book(std::int64_t n, int k) {
  return "r(C4,B_" + std::to_string(n) + "^(" + std::to_string(k) + "))";
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(Errc::DomainError, "cannot parse rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0 || mp::denominator(num) != 1 || mp::denominator(den) != 1) throw bad();
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  BigInt digits = 0;
  int scale = 0;
  bool any = false;
  bool dot = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      if (dot) ++scale;
      any = true;
    } else if (ch == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) throw bad();
  int exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw bad();
    const std::string rest(text.substr(i + 1));
    if (rest.empty()) throw bad();
    std::size_t used = 0;
    try {
      exponent = std::stoi(rest, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != rest.size() || std::abs(exponent) > 400) throw bad();
  }
  const int shift = exponent - scale;
  Rational value(digits);
  if (shift > 0) value *= Rational(mp::pow(BigInt(10), static_cast<unsigned>(shift)));
  if (shift < 0) value /= Rational(mp::pow(BigInt(10), static_cast<unsigned>(-shift)));
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (mp::denominator(value) == 1) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

std::int64_t parsons_upper(std::int64_t n) {
  if (n < 2) throw Error(Errc::DomainError, "parsons_upper needs n >= 2");
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n - 1)));
  return s * s == n - 1 ? n + s + 1 : n + s + 2;
}

std::int64_t g_step(std::int64_t n) {
  if (n < 2) throw Error(Errc::DomainError, "g recurrence needs n >= 2");
  return n + static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n - 1))) + 2;
}

std::int64_t g_cap(std::int64_t n, int k) {
  const std::int64_t kk = k;
  // k^2 + 9k = k(k+9) is always even, so the quarter is a multiple of 1/2.
  return n + kk * static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n))) + (kk * kk + 9 * kk + 3) / 4;
}

GSequence g_sequence(std::int64_t n, int k) {
  if (n < 2) throw Error(Errc::DomainError, "g_sequence needs n >= 2");
  if (k < 0) throw Error(Errc::DomainError, "g_sequence needs k >= 0");
  GSequence s;
  s.values.push_back(n);
  s.caps.push_back(g_cap(n, 0));
  for (int i = 1; i <= k; ++i) {
    s.values.push_back(g_step(s.values.back()));
    s.caps.push_back(g_cap(n, i));
    if (s.values.back() > s.caps.back()) s.cap_violations.push_back(i);
  }
  return s;
}

BoundsParams bounds_params(int k, std::int64_t q, std::int64_t t, const Rational& eps) {
  if (k < 3) throw Error(Errc::DomainError, "bounds_params needs k >= 3");
  if (q < 2) throw Error(Errc::DomainError, "bounds_params needs q >= 2");
  if (eps <= 0 || eps >= 1) throw Error(Errc::DomainError, "eps must lie in (0, 1)");
  BoundsParams p;
  p.k = k;
  p.q = q;
  p.t = t;
  p.eps = eps;
  p.a_k = a_of(k);
  p.b_k = p.a_k - (k + 1) / 2 + 2;
  p.n = q * q - k * q + t + p.a_k;
  p.ladder.resize(k);
  for (int i = 1; i <= k - 2; ++i) p.ladder[i - 1] = q * q - (k - i) * q + t + p.b_k;
  p.ladder[k - 2] = q * q - q + t + p.b_k + 1;
  p.ladder[k - 1] = q * q + t;

  const BigInt base = BigInt(320) * mp::pow(BigInt(k), 4);
  const auto twice_k = static_cast<unsigned>(2 * k);
  const Rational eps_power(mp::pow(mp::numerator(eps), twice_k), mp::pow(mp::denominator(eps), twice_k));
  p.Q = Rational(mp::pow(base, static_cast<unsigned>(k + 1))) / eps_power;
  p.q_at_least_Q = Rational(q) >= p.Q;
  p.t_in_range = t >= 0 && Rational(t) <= (1 - eps) * q;
  return p;
}

Admissibility exact_value_admissible(int k, std::int64_t q, std::int64_t t, const Rational& eps) {
  if (k < 3) throw Error(Errc::DomainError, "exact_value_admissible needs k >= 3");
  if (eps <= 0 || eps >= 1) throw Error(Errc::DomainError, "eps must lie in (0, 1)");
  if (!is_prime_power(q)) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");

  const Rational cap = (1 - eps) * q;
  auto in = [&](std::int64_t lo) { return t >= lo && Rational(t) <= cap; };
  const std::string range_hi = "(1-eps)q = " + to_string(cap);
  if (q % 2 == 0) {
    if (!in(0)) return {false, "even q requires 0 <= t <= " + range_hi};
    if (t == 1) return {false, "even q excludes t = 1"};
    return {true, "even q, 0 <= t <= " + range_hi + ", t != 1"};
  }
  if (q % 4 == 3) {
    if (!in((q + 1) / 2)) return {false, "q = 3 mod 4 requires (q+1)/2 <= t <= " + range_hi};
    if (t == (q + 3) / 2) return {false, "q = 3 mod 4 excludes t = (q+3)/2"};
    return {true, "q = 3 mod 4, (q+1)/2 <= t <= " + range_hi + ", t != (q+3)/2"};
  }
  if (!in((q - 1) / 2)) return {false, "q = 1 mod 4 requires (q-1)/2 <= t <= " + range_hi};
  if (t == (q + 1) / 2) return {false, "q = 1 mod 4 excludes t = (q+1)/2"};
  return {true, "q = 1 mod 4, (q-1)/2 <= t <= " + range_hi + ", t != (q+1)/2"};
}

FloorEvaluation floor_sqrt_minus_power(std::uint64_t n, const Rational& c, const Rational& alpha) {
  const std::uint64_t s = isqrt(n);
  if (c == 0) return {static_cast<std::int64_t>(s), true};

  const bool sqrt_exact = s * s == n;
  std::optional<std::uint64_t> root;
  if (alpha >= 0 && mp::denominator(alpha) <= 4096) {
    root = exact_root(n, mp::denominator(alpha).convert_to<std::uint64_t>());
  }
  if (sqrt_exact && root) {
    const Rational power = Rational(mp::pow(BigInt(*root), mp::numerator(alpha).convert_to<unsigned>()));
    return {to_i64(floor_of(Rational(s) - c * power)), true};
  }

  const F100 fine = evaluate<F100>(n, c, alpha);
  const F50 coarse = evaluate<F50>(n, c, alpha);
  const F100 fine_floor = mp::floor(fine);
  const F50 coarse_floor = mp::floor(coarse);
  const F100 below = fine - fine_floor;
  const F100 above = fine_floor + 1 - fine;
  const F100 gap = below < above ? below : above;
  if (F100(coarse_floor) != fine_floor || gap < F100("1e-40")) {
    throw Error(Errc::InternalInconsistency, "floor of sqrt(n) - c n^alpha is numerically ambiguous");
  }
  return {fine_floor.convert_to<std::int64_t>(), false};
}

std::uint64_t min_n_positive_floor(const Rational& c, const Rational& alpha) {
  auto positive = [&](std::uint64_t n) { return floor_sqrt_minus_power(n, c, alpha).value >= 1; };
  if (c <= 0) return 1;
  if (alpha >= Rational(1, 2)) return 0;
  // f(n) = sqrt(n) - c n^alpha decreases up to n0 = (2 c alpha)^(1/(1/2 - alpha))
  // and increases afterwards; f < 1 on [1, n0] because f(1) = 1 - c < 1.
  std::uint64_t lo = 1;
  if (alpha > 0) {
    const double ca = 2.0 * c.convert_to<double>() * alpha.convert_to<double>();
    const double n0 = std::pow(ca, 1.0 / (0.5 - alpha.convert_to<double>()));
    if (n0 > 1.0) lo = n0 > 4e18 ? 0 : static_cast<std::uint64_t>(n0);
    if (lo == 0) return 0;
  }
  std::uint64_t hi = std::max<std::uint64_t>(lo, 1);
  while (!positive(hi)) {
    if (hi > (std::uint64_t{1} << 61)) return 0;
    lo = hi;
    hi *= 2;
  }
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (positive(mid)) hi = mid;
    else lo = mid + 1;
  }
  return hi;
}

AsymptoticLower asymptotic_lower_bound(std::int64_t n, int k) {
  if (n < 1) throw Error(Errc::DomainError, "asymptotic_lower_bound needs n >= 1");
  if (k < 0) throw Error(Errc::DomainError, "asymptotic_lower_bound needs k >= 0");
  AsymptoticLower out;
  out.floor_term = floor_sqrt_minus_power(static_cast<std::uint64_t>(n), kDefaultC, kDefaultAlpha).value;
  out.regime_reached = out.floor_term >= 1;
  const std::int64_t kk = k;
  if (k == 0) {
    out.value = n;
  } else if (out.regime_reached) {
    // -k^2/2 + 3k/2 = k(3-k)/2, always an integer.
    out.value = n + kk * out.floor_term + kk * (3 - kk) / 2;
  } else {
    out.value = n + kk;
  }
  return out;
}

BoundReport bound_report(std::int64_t n, int k) {
  if (n < 1 || k < 1) throw Error(Errc::DomainError, "bound_report needs n >= 1 and k >= 1");
  BoundReport r;
  r.n = n;
  r.k = k;
  r.asymptotic = asymptotic_lower_bound(n, k);

  std::optional<Candidate> lower;
  std::optional<Candidate> upper;

  // Known small values.
  struct Literal {
    std::int64_t n;
    int k;
    std::int64_t value;
    const char* source;
  };
  static constexpr Literal kLiterals[] = {
      {3, 2, 9, "known value r(C4,B_3^(2)) = 9 (Tse)"},
      {13, 2, 22, "known value r(C4,B_13^(2)) = 22 (Tse)"},
  };
  for (const auto& lit : kLiterals) {
    if (lit.k != k) continue;
    if (lit.n == n) keep_min(upper, {lit.value, lit.source});
    if (lit.n <= n) keep_max(lower, {lit.value, std::string(lit.source) + (lit.n < n ? ", monotone in n" : "")});
  }

  // Trivial: the empty graph on n+k-1 vertices.
  keep_max(lower, {n + k, "empty graph on n+k-1 vertices"});

  // Upper bounds.
  if (n >= 2) {
    if (k == 1) {
      keep_min(upper, {parsons_upper(n), "Parsons: n+floor(sqrt(n-1))+2, one less when n-1 is a square"});
    }
    const auto g = g_sequence(n, k);
    keep_min(upper, {g.values.back(), "iterated recurrence g_k(n), g(n) = n+floor(sqrt(n-1))+2"});
  } else {
    const std::int64_t via2 = k == 1 ? parsons_upper(2) : g_sequence(2, k).values.back();
    keep_min(upper, {via2, "monotone in n: bounded by the n = 2 upper bound"});
  }
  if (k == 2) {
    // r(C4, B_{(q-1)^2+t-2}^(2)) <= q^2 + t for integers q >= 4, 0 <= t <= q-1; monotone in n.
    const auto q_lo = std::max<std::int64_t>(4, static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n))));
    for (std::int64_t q = q_lo; q <= q_lo + 3; ++q) {
      for (std::int64_t t = 0; t <= q - 1; ++t) {
        const std::int64_t np = family_n(q, t, 2);
        if (np >= n) {
          keep_min(upper, {q * q + t, "k=2 upper bound q^2+t for n=(q-1)^2+t-2 at q=" + std::to_string(q) + ", t=" +
                                          std::to_string(t) + (np > n ? ", monotone in n" : "")});
          break;
        }
      }
    }
  }
  // The k >= 3 upper bound q^2 + t needs q >= Q(k, eps) > 10^17, beyond 64-bit n.

  // Lower bounds.
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n)));
  if (k == 1) {
    for (std::int64_t q = root; q >= 2; --q) {
      if (!is_prime_power(q)) continue;
      if (q * q + 1 <= n) {
        keep_max(lower, {q * q + q + 2, "Parsons: r(C4,B_{q^2+1}^(1)) = q^2+q+2 at q=" + std::to_string(q) +
                                            (q * q + 1 < n ? ", monotone in n" : "")});
      } else {
        keep_max(lower, {q * q + q + 1, "Parsons: r(C4,B_{q^2}^(1)) = q^2+q+1 at q=" + std::to_string(q)});
      }
      break;
    }
  }

  // ER_q certificate: delta = q on q^2+q+1 vertices, so its complement is
  // B_{n*}^(k)-free with n* = q^2+q+1 - k(q+1) + C(k,2) + 1.
  {
    const std::int64_t kk = k;
    for (std::int64_t q = root + kk + 2; q >= 2; --q) {
      if (!is_prime_power(q)) continue;
      const std::int64_t n_star = q * q + q + 1 - kk * (q + 1) + choose2(kk) + 1;
      if (n_star < 1 || n_star > n) continue;
      keep_max(lower, {q * q + q + 2, "polarity graph ER_" + std::to_string(q) + " certificate for " +
                                          book(n_star, k) + (n_star < n ? ", monotone in n" : "")});
      break;
    }
  }

  if (k >= 2) {
    const std::int64_t kk = k;
    const std::int64_t q_hi = root + kk + 2;
    for (std::int64_t q = q_hi; q >= 4; --q) {
      if (lower && q * q + q < lower->value) break;
      const auto range = lower_family_range(q, k);
      if (!range) continue;
      for (std::int64_t t = range->hi; t >= range->lo; --t) {
        if (t == range->excluded) continue;
        const std::int64_t np = family_n(q, t, k);
        if (np < 1 || np > n) continue;
        keep_max(lower, {q * q + t, "C4-free induced subgraph of ER_q on q^2+t-1 vertices with min degree q, q=" +
                                        std::to_string(q) + ", t=" + std::to_string(t) + " for " + book(np, k) +
                                        (np < n ? ", monotone in n" : "")});
        break;
      }
    }
  }

  r.lower = {lower->value, lower->provenance};
  r.upper = {upper->value, upper->provenance};
  if (r.lower.value == r.upper.value) r.exact = r.lower.value;
  return r;
}

std::vector<PredictedValue> predicted_table(std::int64_t q_min, std::int64_t q_max, int k, const Rational& eps) {
  std::vector<PredictedValue> out;
  for (std::int64_t q = std::max<std::int64_t>(q_min, 2); q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    for (std::int64_t t = 0; t <= q; ++t) {
      if (!exact_value_admissible(k, q, t, eps).admissible) continue;
      out.push_back({q, t, family_n(q, t, k), q * q + t});
    }
  }
  return out;
}

}  // namespace c4book::bounds
