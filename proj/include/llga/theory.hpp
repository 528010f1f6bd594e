#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

// Closed-form evaluators for the runtime bounds, thresholds and tail
// expressions used by the experiment harness. Log conventions: "log" is
// binary, "ln" natural, and both are clamped to 1 on small arguments
// (log(x) := 1 for x <= 2, ln(x) := 1 for x <= e) to avoid case
// distinctions near zero. n parameters are doubles so that astronomically
// large powers of two remain exactly representable.

namespace llga::theory {

inline double log2_clamped(double x) { return x <= 2.0 ? 1.0 : std::log2(x); }

inline double ln_clamped(double x) {
  static const double e = std::exp(1.0);
  return x <= e ? 1.0 : std::log(x);
}

// max{ n log(n)/lambda, n lambda loglog(lambda)/log(lambda) }.
inline double runtime_bound(double n, double lambda) {
  if (!(lambda >= 1.0 && lambda <= n)) throw std::invalid_argument("runtime_bound: lambda outside [1..n]");
  const double first = n * log2_clamped(n) / lambda;
  const double second = n * lambda * log2_clamped(log2_clamped(lambda)) / log2_clamped(lambda);
  return std::max(first, second);
}

// The earlier bound max{ n log(n)/lambda, lambda n }.
inline double old_runtime_bound(double n, double lambda) {
  if (!(lambda >= 1.0 && lambda <= n)) throw std::invalid_argument("old_runtime_bound: lambda outside [1..n]");
  return std::max(n * log2_clamped(n) / lambda, lambda * n);
}

struct OptimalLambda {
  double real_value;
  std::int64_t rounded;  // nearest integer, at least 1
};

// sqrt( log(n) loglog(n) / logloglog(n) ), clamped logs.
inline OptimalLambda optimal_lambda(double n) {
  if (!(n >= 1.0)) throw std::invalid_argument("optimal_lambda: n must be >= 1");
  const double l1 = log2_clamped(n);
  const double l2 = log2_clamped(l1);
  const double l3 = log2_clamped(l2);
  const double v = std::sqrt(l1 * l2 / l3);
  return {v, std::max<std::int64_t>(1, std::llround(v))};
}

// Empirical stand-in for the absolute constant of the per-iteration
// improvement probability; estimated from data, never asserted.
struct SuccessProbModel {
  double c_fit = 1.0;
};

// Lower bound on the probability that one iteration strictly improves:
// c_fit * (1 - ((n-d)/n)^(lambda^2/2)). Requires lambda >= 2.
inline double success_prob_lower(double n, double d, std::int64_t lambda,
                                 SuccessProbModel model = {}) {
  if (lambda < 2) throw std::invalid_argument("success_prob_lower: lambda must be >= 2");
  if (!(d >= 0.0 && d <= n)) throw std::invalid_argument("success_prob_lower: d outside [0..n]");
  if (!(model.c_fit > 0.0 && model.c_fit <= 1.0))
    throw std::invalid_argument("success_prob_lower: c_fit outside (0,1]");
  const double lam = static_cast<double>(lambda);
  return model.c_fit * (1.0 - std::pow((n - d) / n, lam * lam / 2.0));
}

// Fitness-gain floor achieved by the crossover phase with probability
// >= 1 - 1/e: floor(min{ (ln(lambda)/2 - 1) / (lnln(lambda) + ln(D')),
// lambda/D' }), clamped below at 0.
inline std::int64_t crossover_gain_threshold(std::int64_t lambda, double d_prime) {
  if (lambda < 2) throw std::invalid_argument("crossover_gain_threshold: lambda must be >= 2");
  if (!(d_prime > 0.0)) throw std::invalid_argument("crossover_gain_threshold: D' must be positive");
  const double lam = static_cast<double>(lambda);
  const double numer = 0.5 * ln_clamped(lam) - 1.0;
  const double denom = ln_clamped(ln_clamped(lam)) + std::log(d_prime);
  const double first = numer / denom;  // +-inf on a zero denominator is fine under min
  const double gamma = std::floor(std::min(first, lam / d_prime));
  return gamma < 0.0 ? 0 : static_cast<std::int64_t>(gamma);
}

// Pr[X >= (1+delta) mu] <= (e^delta / (1+delta)^(1+delta))^mu, delta >= 0.
inline double chernoff_upper_strong(double mu, double delta) {
  if (!(mu >= 0.0)) throw std::invalid_argument("chernoff_upper_strong: mu must be >= 0");
  if (!(delta >= 0.0)) throw std::invalid_argument("chernoff_upper_strong: delta must be >= 0");
  return std::exp(mu * (delta - (1.0 + delta) * std::log1p(delta)));
}

// Pr[X >= (1+delta) mu] <= exp(-delta^2 mu / 3), delta in [0,1].
inline double chernoff_upper(double mu, double delta) {
  if (!(mu >= 0.0)) throw std::invalid_argument("chernoff_upper: mu must be >= 0");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("chernoff_upper: delta outside [0,1]");
  return std::exp(-delta * delta * mu / 3.0);
}

// Pr[X <= (1-delta) mu] <= exp(-delta^2 mu / 2), delta in [0,1].
inline double chernoff_lower(double mu, double delta) {
  if (!(mu >= 0.0)) throw std::invalid_argument("chernoff_lower: mu must be >= 0");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("chernoff_lower: delta outside [0,1]");
  return std::exp(-delta * delta * mu / 2.0);
}

// H_n, summed smallest terms first.
inline double harmonic(std::uint64_t n) {
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

struct GeometricSumBounds {
  double expectation_bound;  // (1/C) n H_n
  double tail_prob_bound;    // n^(-delta)
  double tail_threshold;     // (1+delta) (1/C) n ln(n)
};

// Bounds for a sum of independent geometrics with p_i >= C i/n.
inline GeometricSumBounds geometric_sum_bounds(std::uint64_t n, double C, double delta) {
  if (!(C > 0.0 && C <= 1.0)) throw std::invalid_argument("geometric_sum_bounds: C outside (0,1]");
  if (!(delta > 0.0)) throw std::invalid_argument("geometric_sum_bounds: delta must be positive");
  const double nd = static_cast<double>(n);
  return {(1.0 / C) * nd * harmonic(n), std::pow(nd, -delta),
          (1.0 + delta) * (1.0 / C) * nd * ln_clamped(nd)};
}

// Order-of-magnitude reference (n/lambda^2)^(-delta) for the upper tail of
// the runtime; reporting only, never a pass/fail constant.
inline double runtime_tail_bound(double n, double lambda, double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("runtime_tail_bound: delta must be >= 0");
  return std::pow(n / (lambda * lambda), -delta);
}

// Additive drift: expected hitting time bound g(X_0)/delta. The same
// quotient serves as upper or lower prediction depending on which drift
// bound is plugged in.
inline double additive_drift_time(double initial_potential, double drift_per_step) {
  if (!(initial_potential >= 0.0))
    throw std::invalid_argument("additive_drift_time: potential must be >= 0");
  if (!(drift_per_step > 0.0))
    throw std::invalid_argument("additive_drift_time: drift must be positive");
  return initial_potential / drift_per_step;
}

// First-phase boundary d_0 = n lnln(lambda)/ln(lambda), natural logs as in
// the upper-bound proof. (The matching runtime statement is written with
// binary logs; callers that want the log2 variant compute it directly.)
inline double phase_boundary_d0(double n, double lambda) {
  return n * ln_clamped(ln_clamped(lambda)) / ln_clamped(lambda);
}

}  // namespace llga::theory
