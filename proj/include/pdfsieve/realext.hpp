#pragma once

#include <utility>
#include <vector>

#include "pdfsieve/sieve.hpp"

namespace pdfsieve {

/// Real-argument view of the detector and the counting function it builds.
/// The detector extends to the reals as the bit of ceil(x), a left-open step
/// function; the count extends by linear interpolation between consecutive
/// integers. The slope of the interpolant on (m, m+1] is then exactly the
/// extended detector value anywhere inside the piece, and integrating the
/// extended detector from 2 recovers the interpolant up to the unit mass
/// sitting at 2 itself, which enters as the integration constant.
class InterpolatedPi {
 public:
  explicit InterpolatedPi(u64 n_max, const SieveOptions& opts = {});
  InterpolatedPi(const SieveBits& bits, u64 n_max);

  u64 n_max() const { return table_.size() - 1; }
  u64 pi_int(u64 n) const;

  /// Detector bit of ceil(x). x >= 2, ceil(x) <= n_max.
  int pdf_real(double x) const;

  /// Piecewise-linear count: pi(floor(x)) + frac(x) * (pi(floor(x)+1) -
  /// pi(floor(x))). Domain 2 <= x <= n_max - 1.
  double pi_hat(double x) const;

  /// (slope of the active linear piece, pdf_real(x)). The slope is computed
  /// exactly from the integer table, which equals the backward difference
  /// quotient for every h in (0, h_min] once no breakpoint lies in
  /// [x - h_min, x), so the comparison is exact rather than a float limit.
  /// Domain 2 < x <= n_max - 1; an h_min that reaches across the breakpoint
  /// below x is a domain error.
  std::pair<double, int> left_derivative_check(double x, double h_min) const;

  /// Integral of pdf_real over (2, x] plus the unit mass at 2. Equals
  /// pi_hat(x) on the whole domain.
  double integrate_pdf_real(double x) const;

 private:
  std::vector<u32> table_;   // pi at 0..n_max
  std::vector<u8> is_prime_;
};

/// Point-mass realization of the detector: one unit spike per prime.
/// Integrating against the indicator of [0, x] gives back the step form of
/// the counting function.
struct SpikeTrain {
  std::vector<u64> locations;

  SpikeTrain() = default;
  /// Validates that locations are strictly increasing primes.
  explicit SpikeTrain(std::vector<u64> locations);
  static SpikeTrain build(u64 n_max, const SieveOptions& opts = {});
};

/// #{locations <= x}; equals pi(floor(x)) when the train covers floor(x).
u64 step_pi_from_spikes(double x, const SpikeTrain& train);

}  // namespace pdfsieve
