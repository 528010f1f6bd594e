#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "llga/rng.hpp"

namespace llga {

// Fixed-length binary search point, bit-packed into 64-bit words. Length is
// immutable after creation; value semantics throughout.
class BitString {
 public:
  explicit BitString(std::size_t n) : n_(n), words_(word_count(n), 0) {
    if (n == 0) throw std::invalid_argument("BitString: length must be positive");
  }

  static BitString zeros(std::size_t n) { return BitString(n); }

  static BitString ones(std::size_t n) {
    BitString b(n);
    for (auto& w : b.words_) w = ~0ULL;
    b.mask_tail();
    return b;
  }

  static BitString random(std::size_t n, RandomSource& rng) {
    BitString b(n);
    for (auto& w : b.words_) w = rng.next_u64();
    b.mask_tail();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

  void set(std::size_t i, bool value) {
    const std::uint64_t mask = 1ULL << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

  std::size_t count_ones() const {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::size_t hamming_to(const BitString& other) const {
    if (other.n_ != n_) throw std::invalid_argument("hamming_to: length mismatch");
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    return total;
  }

  BitString complemented() const {
    BitString b(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) b.words_[i] = ~words_[i];
    b.mask_tail();
    return b;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  // Unused tail bits stay zero so word-wise popcounts are exact.
  void mask_tail() {
    const std::size_t rem = n_ & 63;
    if (rem != 0) words_.back() &= (~0ULL) >> (64 - rem);
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

// Number of positions that are 0 in x and 1 in xp (the "good bits" gained by
// xp over x).
inline std::size_t good_bit_count(const BitString& x, const BitString& xp) {
  if (x.size() != xp.size()) throw std::invalid_argument("good_bit_count: length mismatch");
  const auto xw = x.words();
  const auto pw = xp.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < xw.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(~xw[i] & pw[i]));
  return total;
}

}  // namespace llga
