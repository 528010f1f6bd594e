#pragma once

#include <cstdint>
#include <stdexcept>

namespace llga {

// Instance/parameter bundle: length n, offspring population size lambda,
// mutation probability p, crossover bias c.
struct GaParams {
  std::size_t n;
  std::size_t lambda;
  double p;
  double c;

  GaParams(std::size_t n_, std::size_t lambda_, double p_, double c_)
      : n(n_), lambda(lambda_), p(p_), c(c_) {
    if (n == 0) throw std::invalid_argument("GaParams: n must be positive");
    if (lambda < 1 || lambda > n) throw std::invalid_argument("GaParams: lambda outside [1..n]");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("GaParams: p outside (0,1]");
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("GaParams: c outside [0,1]");
  }

  // The standard parameter setting p = lambda/n, c = 1/lambda.
  static GaParams standard(std::size_t n, std::size_t lambda) {
    if (n == 0) throw std::invalid_argument("GaParams: n must be positive");
    if (lambda < 1 || lambda > n) throw std::invalid_argument("GaParams: lambda outside [1..n]");
    return GaParams(n, lambda, static_cast<double>(lambda) / static_cast<double>(n),
                    1.0 / static_cast<double>(lambda));
  }
};

}  // namespace llga
