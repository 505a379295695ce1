#include "c4book/gf.hpp"

#include <algorithm>

#include "c4book/error.hpp"

namespace c4book::gf {

namespace {

using Poly = std::vector<Residue>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

// Remainder of `num` modulo the monic polynomial `div`, both constant-first.
Poly poly_rem(Poly num, const Poly& div, Residue p) {
  const std::size_t dd = div.size() - 1;
  while (num.size() > dd) {
    const Residue lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i < dd; ++i) {
        const std::uint64_t sub = mulmod(lead, div[i], p);
        num[shift + i] = static_cast<Residue>((num[shift + i] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

bool all_zero(const Poly& poly) {
  return std::all_of(poly.begin(), poly.end(), [](Residue c) { return c == 0; });
}

// Advances a coefficient vector as an odometer with position `fast` varying
// quickest. Returns false once every combination has been visited.
bool advance(Poly& coeffs, Residue p, bool constant_fastest) {
  const std::size_t n = coeffs.size();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = constant_fastest ? step : n - 1 - step;
    if (++coeffs[i] < p) return true;
    coeffs[i] = 0;
  }
  return false;
}

void require_same_field(const std::shared_ptr<const detail::FieldData>& a,
                        const std::shared_ptr<const detail::FieldData>& b) {
  if (!a || !b) throw Error(Errc::FieldMismatch, "operation on a default-constructed field element");
  if (a == b) return;
  if (a->p != b->p || a->e != b->e || a->modulus != b->modulus)
    throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

std::string poly_to_string(std::span<const Residue> coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Residue c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, PrimePower& out) noexcept {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d != 0) continue;
    unsigned e = 0;
    while (q % d == 0) {
      q /= d;
      ++e;
    }
    if (q != 1) return false;
    out = {d, e};
    return true;
  }
  out = {q, 1};
  return true;
}

bool is_irreducible(std::span<const Residue> monic, Residue p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t degree = monic.size() - 1;
  if (degree == 1) return true;
  const Poly target(monic.begin(), monic.end());
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    Poly low(d, 0);
    do {
      std::copy(low.begin(), low.end(), divisor.begin());
      if (all_zero(poly_rem(target, divisor, p))) return false;
    } while (advance(low, p, true));
  }
  return true;
}

Field::Field(Residue p, unsigned e, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::DomainError, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > cap) {
      throw Error(Errc::CapExceeded,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds cap " + std::to_string(cap));
    }
  }

  // Monic candidates of degree e in lexicographic order of (c_0, ..., c_{e-1}).
  Poly low(e, 0);
  Poly modulus;
  do {
    Poly candidate = low;
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      modulus = std::move(candidate);
      break;
    }
  } while (advance(low, p, false));
  if (modulus.empty()) throw Error(Errc::InternalInconsistency, "no irreducible polynomial found");

  data_ = std::make_shared<const detail::FieldData>(detail::FieldData{p, e, q, std::move(modulus)});
}

std::string Field::modulus_string() const { return poly_to_string(data_->modulus); }

FieldElement Field::zero() const { return FieldElement(data_, Poly(data_->e, 0)); }

FieldElement Field::one() const {
  Poly c(data_->e, 0);
  c[0] = 1 % data_->p;
  return FieldElement(data_, std::move(c));
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= data_->q) throw Error(Errc::DomainError, "element index out of range");
  Poly c(data_->e, 0);
  for (unsigned i = 0; i < data_->e; ++i) {
    c[i] = static_cast<Residue>(index % data_->p);
    index /= data_->p;
  }
  return FieldElement(data_, std::move(c));
}

FieldElement Field::from_coeffs(std::vector<Residue> coeffs) const {
  if (coeffs.size() != data_->e) throw Error(Errc::DomainError, "coefficient vector must have length e");
  for (Residue c : coeffs) {
    if (c >= data_->p) throw Error(Errc::DomainError, "coefficient out of range");
  }
  return FieldElement(data_, std::move(coeffs));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(data_->q);
  for (std::uint64_t i = 0; i < data_->q; ++i) out.push_back(element(i));
  return out;
}

bool operator==(const Field& a, const Field& b) noexcept {
  return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->e == b.data_->e &&
                                a.data_->modulus == b.data_->modulus);
}

bool FieldElement::is_zero() const noexcept { return all_zero(coeffs_); }

std::uint64_t FieldElement::index() const noexcept {
  if (!field_) return 0;
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * field_->p + coeffs_[i];
  return idx;
}

std::string FieldElement::to_string() const { return poly_to_string(coeffs_); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return a.coeffs_ == b.coeffs_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  const Residue p = a.field_->p;
  Poly c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Residue>((a.coeffs_[i] + b.coeffs_[i]) % p);
  return FieldElement(a.field_, std::move(c));
}

FieldElement neg(const FieldElement& a) {
  if (!a.field_) throw Error(Errc::FieldMismatch, "operation on a default-constructed field element");
  const Residue p = a.field_->p;
  Poly c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Residue>((p - a.coeffs_[i]) % p);
  return FieldElement(a.field_, std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  const auto& f = *a.field_;
  const std::size_t e = f.e;
  std::vector<std::uint64_t> wide(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      wide[i + j] = (wide[i + j] + mulmod(a.coeffs_[i], b.coeffs_[j], f.p)) % f.p;
    }
  }
  Poly product(wide.begin(), wide.end());
  Poly reduced = poly_rem(std::move(product), f.modulus, f.p);
  reduced.resize(e, 0);
  return FieldElement(a.field_, std::move(reduced));
}

FieldElement pow(const FieldElement& a, std::uint64_t exponent) {
  if (!a.field_) throw Error(Errc::FieldMismatch, "operation on a default-constructed field element");
  Poly one(a.field_->e, 0);
  one[0] = 1;
  FieldElement result(a.field_, std::move(one));
  FieldElement base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

FieldElement inv(const FieldElement& a) {
  if (!a.field_) throw Error(Errc::FieldMismatch, "operation on a default-constructed field element");
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (a.field_->e == 1) {
    const auto p = a.field_->p;
    Poly c{static_cast<Residue>(powmod(a.coeffs_[0], p - 2, p))};
    return FieldElement(a.field_, std::move(c));
  }
  return pow(a, a.field_->q - 2);
}

Tables make_tables(const Field& field) {
  const std::uint64_t q = field.q();
  if (q > kMaxTableOrder) {
    throw Error(Errc::CapExceeded, "lookup tables limited to q <= " + std::to_string(kMaxTableOrder));
  }
  const auto elems = field.elements();
  Tables t;
  t.q = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  t.neg.resize(q);
  t.inv.assign(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    t.neg[a] = static_cast<std::uint32_t>(neg(elems[a]).index());
    if (a != 0) t.inv[a] = static_cast<std::uint32_t>(inv(elems[a]).index());
    for (std::uint64_t b = a; b < q; ++b) {
      const auto s = static_cast<std::uint32_t>(add(elems[a], elems[b]).index());
      const auto m = static_cast<std::uint32_t>(mul(elems[a], elems[b]).index());
      t.add[a * q + b] = t.add[b * q + a] = s;
      t.mul[a * q + b] = t.mul[b * q + a] = m;
    }
  }
  return t;
}

}  // namespace c4book::gf
