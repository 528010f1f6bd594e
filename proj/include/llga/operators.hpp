#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "llga/bitstring.hpp"
#include "llga/rng.hpp"

namespace llga {

// Mutation strength: one draw from Binomial(n, p).
inline std::size_t sample_ell(RandomSource& rng, std::size_t n, double p) {
  return static_cast<std::size_t>(rng.binomial(n, p));
}

namespace detail {

// Uniform ell-subset of [0..n) by partial Fisher-Yates over a persistent
// identity table; the prefix swaps are undone afterwards, so each call costs
// O(ell) regardless of n. One table per thread.
inline void sample_flip_set(std::size_t n, std::size_t ell, RandomSource& rng,
                            std::vector<std::uint32_t>& out) {
  thread_local std::vector<std::uint32_t> ident;
  thread_local std::vector<std::uint32_t> swapped_with;
  while (ident.size() < n) ident.push_back(static_cast<std::uint32_t>(ident.size()));
  swapped_with.clear();
  out.clear();
  for (std::size_t i = 0; i < ell; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(ident[i], ident[j]);
    swapped_with.push_back(static_cast<std::uint32_t>(j));
    out.push_back(ident[i]);
  }
  for (std::size_t i = ell; i-- > 0;) std::swap(ident[i], ident[swapped_with[i]]);
}

}  // namespace detail

// mut_ell: flip exactly ell distinct positions, chosen uniformly among all
// ell-subsets. The parent is not modified.
inline void mutate_into(BitString& out, const BitString& x, std::size_t ell, RandomSource& rng) {
  const std::size_t n = x.size();
  if (ell > n) throw std::invalid_argument("mutate: ell exceeds bitstring length");
  thread_local std::vector<std::uint32_t> positions;
  detail::sample_flip_set(n, ell, rng, positions);
  out = x;
  for (const auto pos : positions) out.flip(pos);
}

inline BitString mutate(const BitString& x, std::size_t ell, RandomSource& rng) {
  BitString out(x.size());
  mutate_into(out, x, ell, rng);
  return out;
}

// cross_c: biased uniform crossover; every position independently takes the
// bit from xp with probability c, from x otherwise. Positions taken from xp
// are enumerated by geometric gaps, so the cost is O(n/64 + n*c) expected.
inline void crossover_into(BitString& out, const BitString& x, const BitString& xp, double c,
                           RandomSource& rng) {
  const std::size_t n = x.size();
  if (xp.size() != n) throw std::invalid_argument("crossover: length mismatch");
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("crossover: c outside [0,1]");
  if (c >= 1.0) {  // every bit from xp
    out = xp;
    return;
  }
  out = x;
  if (c <= 0.0) return;
  std::size_t pos = 0;
  for (;;) {
    pos += static_cast<std::size_t>(rng.geometric(c));
    if (pos > n) break;
    const std::size_t i = pos - 1;
    out.set(i, xp.test(i));
  }
}

inline BitString crossover(const BitString& x, const BitString& xp, double c, RandomSource& rng) {
  BitString out(x.size());
  crossover_into(out, x, xp, c, rng);
  return out;
}

// Index of a maximum fitness value, uniform among ties (single pass,
// reservoir tie-break: the k-th tied maximum replaces the pick with
// probability 1/k).
inline std::size_t select_best(std::span<const std::int64_t> fitness_values, RandomSource& rng) {
  if (fitness_values.empty()) throw std::invalid_argument("select_best: empty candidate list");
  std::size_t pick = 0;
  std::int64_t best = fitness_values[0];
  std::uint64_t ties = 1;
  for (std::size_t i = 1; i < fitness_values.size(); ++i) {
    if (fitness_values[i] > best) {
      best = fitness_values[i];
      pick = i;
      ties = 1;
    } else if (fitness_values[i] == best) {
      ++ties;
      if (rng.below(ties) == 0) pick = i;
    }
  }
  return pick;
}

inline std::size_t select_best(std::span<const BitString> candidates,
                               std::span<const std::int64_t> fitness_values, RandomSource& rng) {
  if (candidates.size() != fitness_values.size())
    throw std::invalid_argument("select_best: list length mismatch");
  return select_best(fitness_values, rng);
}

}  // namespace llga
