#pragma once

#include <vector>

#include "pdfsieve/delta.hpp"
#include "pdfsieve/sieve.hpp"

namespace pdfsieve {

// Density and constant computations behind the counting functions. Products
// over primes are accumulated as compensated sums of log1p terms in long
// double and exponentiated once, so near-1 factors lose no precision.

/// prod_{l=1..k} (1 - 1/p_l): the density of integers passing the detector
/// over the first k primes.
long double theoretical_density(std::size_t k);

/// (1/2) * prod_{m=2..k} (1 - 2/p_m): the density of n passing the
/// simplified twin detector over the first k primes.
long double twin_theoretical_density(std::size_t k);

/// 2 * prod_{m=2..k} (1 - 1/(p_m - 1)^2): the limit of ratio_empirical as n
/// grows with k fixed. Converges to twice the twin prime constant.
long double ratio_target(std::size_t k);

/// (pi_twin_k(n) / n) * (n / pi_k(n))^2.
double ratio_empirical(std::size_t k, u64 n);

/// prod over odd primes p <= p_max of (1 - 1/(p-1)^2). p_max >= 3.
long double twin_constant(u64 p_max, const SieveOptions& opts = {});
long double twin_constant(const SieveBits& bits, u64 p_max);

/// twin_constant with a process-wide cache keyed on p_max.
long double twin_constant_cached(u64 p_max, const SieveOptions& opts = {});

/// prod over odd primes p | half_gap of (p - 1) / (p - 2). Equals 1 exactly
/// when half_gap is a power of two.
long double singular_series(u64 half_gap);

/// Integral of dt / ln(t)^2 from 2 to x, by adaptive Simpson quadrature to
/// about 1e-12 relative accuracy. x >= 2.
double li2(double x);

struct DensityReport {
  std::size_t k = 0;
  u64 n = 0;
  Ratio empirical;
  long double theoretical = 0;
  /// |empirical - theoretical|, recomputed from the stored values.
  long double abs_error() const;
};

DensityReport density_report(std::size_t k, u64 n);
DensityReport twin_density_report(std::size_t k, u64 n);

struct HLOptions {
  u64 c_twin_p_max = 100'000'000;
  /// Reuse a precomputed twin constant when nonzero.
  double c_twin = 0;
  /// Borrow an existing sieve covering n + 2*half_gap instead of building one.
  const SieveBits* bits = nullptr;
  SieveOptions sieve;
};

struct HLPrediction {
  u64 half_gap = 1;
  u64 n = 0;
  double c_twin = 0;
  double singular_factor = 0;
  double li2_value = 0;
  double predicted = 0;  // 2 * c_twin * singular_factor * li2_value
  u64 actual = 0;        // pi_pair(n, half_gap)
  double ratio = 0;      // actual / predicted
};

/// Predicted vs actual pair count for gap 2*half_gap at n.
HLPrediction hl_prediction(u64 n, u64 half_gap, const HLOptions& opts = {});

/// Sum of 1/p + 1/(p+2) over twin pairs with p <= n. Bounded above by
/// Brun's constant, so the partial sums stay below 1.9021604 forever.
double brun_partial(const SieveBits& bits, u64 n);
double brun_partial(u64 n, const SieveOptions& opts = {});
/// Partial sums at each checkpoint in one pass. The sieve must cover
/// back() + 2.
std::vector<double> brun_partial_series(const SieveBits& bits,
                                        const std::vector<u64>& checkpoints);

/// 3.42 * 2 * c_twin * n / ln(n)^2: an upper bound for the twin count at n.
double brun_upper_bound(double n, double c_twin);

/// pi(n) * ln(n) / n. Decreases toward 1 over the tested range.
double pnt_ratio(const SieveBits& bits, u64 n);
double pnt_ratio(u64 n, const SieveOptions& opts = {});

}  // namespace pdfsieve
