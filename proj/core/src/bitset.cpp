#include "c4book/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace c4book {

void Bitset::set_all() noexcept {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  trim();
}

void Bitset::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t Bitset::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= size_) return npos;
  std::size_t w = from / kWordBits;
  Word bits = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return npos;
    bits = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) noexcept {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bitset& Bitset::flip() noexcept {
  for (Word& w : words_) w = ~w;
  trim();
  return *this;
}

std::vector<std::size_t> Bitset::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

void Bitset::trim() noexcept {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t intersection_count(const Bitset& a, const Bitset& b) noexcept {
  assert(a.size() == b.size());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return total;
}

bool intersects_twice(const Bitset& a, const Bitset& b) noexcept {
  assert(a.size() == b.size());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t seen = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    seen += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    if (seen >= 2) return true;
  }
  return false;
}

}  // namespace c4book
