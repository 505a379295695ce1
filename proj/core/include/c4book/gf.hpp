#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace c4book::gf {

using Residue = std::uint32_t;

/// Largest field order accepted by default.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

/// Largest order for which index-based lookup tables are built.
inline constexpr std::uint64_t kMaxTableOrder = 1024;

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over Z_p (coefficients constant term
/// first, leading 1 included) by trial division against every monic
/// polynomial of degree <= deg/2.
bool is_irreducible(std::span<const Residue> monic, Residue p);

namespace detail {
struct FieldData {
  Residue p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  std::vector<Residue> modulus;  // e + 1 coefficients, monic
};
}  // namespace detail

class Field;

/// Element of GF(p^e) as a residue polynomial of degree < e. The coefficient
/// vector always has length e with every entry in [0, p).
class FieldElement {
 public:
  FieldElement() = default;

  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  /// Base-p integer encoding sum c_i p^i; also the position in Field::elements().
  std::uint64_t index() const noexcept;
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  friend FieldElement add(const FieldElement& a, const FieldElement& b);
  friend FieldElement sub(const FieldElement& a, const FieldElement& b);
  friend FieldElement mul(const FieldElement& a, const FieldElement& b);
  friend FieldElement neg(const FieldElement& a);
  friend FieldElement inv(const FieldElement& a);
  friend FieldElement pow(const FieldElement& a, std::uint64_t exponent);

 private:
  friend class Field;
  FieldElement(std::shared_ptr<const detail::FieldData> field, std::vector<Residue> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const detail::FieldData> field_;
  std::vector<Residue> coeffs_;
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return mul(a, inv(b)); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

/// GF(q), q = p^e, with the lexicographically smallest monic irreducible
/// modulus of degree e (coefficients compared from the constant term up).
class Field {
 public:
  /// Throws NonPrimeCharacteristic, CapExceeded, or DomainError for e == 0.
  Field(Residue p, unsigned e, std::uint64_t cap = kDefaultCap);

  Residue p() const noexcept { return data_->p; }
  unsigned e() const noexcept { return data_->e; }
  std::uint64_t q() const noexcept { return data_->q; }
  std::span<const Residue> modulus() const noexcept { return data_->modulus; }
  std::string modulus_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Element with the given base-p encoding; DomainError if index >= q.
  FieldElement element(std::uint64_t index) const;
  /// DomainError on wrong length or out-of-range coefficient.
  FieldElement from_coeffs(std::vector<Residue> coeffs) const;

  /// All q elements ordered by index: 0, 1, ..., p-1, x, x+1, ...
  std::vector<FieldElement> elements() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  std::shared_ptr<const detail::FieldData> data_;
};

/// Factory spelled after the operation it implements.
inline Field field_new(Residue p, unsigned e, std::uint64_t cap = kDefaultCap) { return Field(p, e, cap); }

/// Splits q into (p, e) if q is a prime power.
struct PrimePower {
  std::uint64_t p;
  unsigned e;
};
bool prime_power(std::uint64_t q, PrimePower& out) noexcept;

/// Field arithmetic on element indices, for kernels that touch every pair of
/// elements (projective geometry). Built once per field; CapExceeded past
/// kMaxTableOrder.
struct Tables {
  std::uint64_t q = 0;
  std::vector<std::uint32_t> add;  // q*q, row-major
  std::vector<std::uint32_t> mul;  // q*q, row-major
  std::vector<std::uint32_t> neg;  // q
  std::vector<std::uint32_t> inv;  // q, inv[0] unused

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const noexcept { return add[a * q + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const noexcept { return mul[a * q + b]; }
};

Tables make_tables(const Field& field);

}  // namespace c4book::gf
