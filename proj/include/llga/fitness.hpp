#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "llga/bitstring.hpp"

namespace llga {

// Counts fitness evaluations and remembers the count at which an optimal
// point was first evaluated (the optimization time T).
struct EvaluationCounter {
  std::uint64_t count = 0;
  std::optional<std::uint64_t> first_optimum_at;
};

// The OneMax family: plain OneMax (number of ones) or the generalized
// variant OM_z (number of positions agreeing with a hidden target z).
// Maximum value n, attained exactly at all-ones resp. z.
class FitnessFunction {
 public:
  static FitnessFunction one_max(std::size_t n) { return FitnessFunction(n); }

  static FitnessFunction generalized(BitString target) {
    FitnessFunction f(target.size());
    f.target_ = std::move(target);
    return f;
  }

  std::size_t n() const { return n_; }
  bool is_generalized() const { return target_.has_value(); }
  const BitString* target() const { return target_ ? &*target_ : nullptr; }

  // Raw fitness value, not counted. Diagnostics only.
  std::int64_t value(const BitString& x) const {
    if (x.size() != n_) throw std::invalid_argument("FitnessFunction: length mismatch");
    if (!target_) return static_cast<std::int64_t>(x.count_ones());
    return static_cast<std::int64_t>(n_ - x.hamming_to(*target_));
  }

  // Counted evaluation: increments the counter by exactly one and records
  // the first time an optimum is seen.
  std::int64_t evaluate(const BitString& x, EvaluationCounter& counter) const {
    const std::int64_t v = value(x);
    ++counter.count;
    if (v == static_cast<std::int64_t>(n_) && !counter.first_optimum_at)
      counter.first_optimum_at = counter.count;
    return v;
  }

  // Fitness distance d(x) = n - value(x); not counted.
  std::int64_t distance(const BitString& x) const {
    return static_cast<std::int64_t>(n_) - value(x);
  }

 private:
  explicit FitnessFunction(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("FitnessFunction: n must be positive");
  }

  std::size_t n_;
  std::optional<BitString> target_;
};

}  // namespace llga
