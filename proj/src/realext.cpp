#include "pdfsieve/realext.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdfsieve {

InterpolatedPi::InterpolatedPi(const SieveBits& bits, u64 n_max) {
  if (n_max < 3) throw std::invalid_argument("InterpolatedPi: n_max must be >= 3");
  if (n_max > bits.n_max())
    throw std::invalid_argument("InterpolatedPi: sieve does not cover n_max");
  table_.resize(n_max + 1);
  is_prime_.resize(n_max + 1);
  u32 count = 0;
  for (u64 m = 0; m <= n_max; ++m) {
    const bool p = m >= 2 && bits.is_prime(m);
    is_prime_[m] = p ? 1 : 0;
    count += p;
    table_[m] = count;
  }
}

InterpolatedPi::InterpolatedPi(u64 n_max, const SieveOptions& opts)
    : InterpolatedPi(segmented_sieve(std::max<u64>(n_max, 3), opts), std::max<u64>(n_max, 3)) {}

u64 InterpolatedPi::pi_int(u64 n) const {
  if (n < 2 || n >= table_.size())
    throw std::invalid_argument("InterpolatedPi::pi_int: n outside [2, n_max]");
  return table_[n];
}

int InterpolatedPi::pdf_real(double x) const {
  if (!(x >= 2.0)) throw std::invalid_argument("pdf_real: x must be >= 2");
  const double c = std::ceil(x);
  if (c > static_cast<double>(is_prime_.size() - 1))
    throw std::invalid_argument("pdf_real: ceil(x) beyond n_max");
  return is_prime_[static_cast<u64>(c)];
}

double InterpolatedPi::pi_hat(double x) const {
  if (!(x >= 2.0) || !(x <= static_cast<double>(table_.size() - 2)))
    throw std::invalid_argument("pi_hat: x outside [2, n_max - 1]");
  const double fl = std::floor(x);
  const u64 m = static_cast<u64>(fl);
  const double frac = x - fl;
  return static_cast<double>(table_[m]) +
         frac * (static_cast<double>(table_[m + 1]) - static_cast<double>(table_[m]));
}

std::pair<double, int> InterpolatedPi::left_derivative_check(double x, double h_min) const {
  if (!(x > 2.0) || !(x <= static_cast<double>(table_.size() - 2)))
    throw std::invalid_argument("left_derivative_check: x outside (2, n_max - 1]");
  if (!(h_min > 0.0))
    throw std::invalid_argument("left_derivative_check: h_min must be positive");
  const double fl = std::floor(x);
  const double left_break = (fl == x) ? x - 1.0 : fl;
  if (x - h_min < left_break)
    throw std::invalid_argument("left_derivative_check: h_min reaches across the breakpoint below x");
  const u64 m = static_cast<u64>(left_break);
  const double slope = static_cast<double>(table_[m + 1]) - static_cast<double>(table_[m]);
  return {slope, pdf_real(x)};
}

double InterpolatedPi::integrate_pdf_real(double x) const {
  if (!(x >= 2.0) || !(x <= static_cast<double>(table_.size() - 2)))
    throw std::invalid_argument("integrate_pdf_real: x outside [2, n_max - 1]");
  const double fl = std::floor(x);
  const u64 m = static_cast<u64>(fl);
  // pdf_real is constant on each span (j-1, j]; whole spans contribute their
  // detector bit, the tail span (fl, x] contributes a fraction of one.
  u64 whole = 0;
  for (u64 j = 3; j <= m; ++j) whole += is_prime_[j];
  const double tail = (x - fl) * static_cast<double>(is_prime_[m + 1]);
  return 1.0 + static_cast<double>(whole) + tail;
}

SpikeTrain::SpikeTrain(std::vector<u64> locs) : locations(std::move(locs)) {
  u64 prev = 0;
  for (u64 p : locations) {
    if (p <= prev || !detail::trial_division_prime(p))
      throw std::invalid_argument("SpikeTrain: locations must be strictly increasing primes");
    prev = p;
  }
}

SpikeTrain SpikeTrain::build(u64 n_max, const SieveOptions& opts) {
  SpikeTrain train;
  train.locations = segmented_sieve(n_max, opts).to_primes();
  return train;
}

u64 step_pi_from_spikes(double x, const SpikeTrain& train) {
  const auto it = std::upper_bound(
      train.locations.begin(), train.locations.end(), x,
      [](double value, u64 loc) { return value < static_cast<double>(loc); });
  return static_cast<u64>(it - train.locations.begin());
}

}  // namespace pdfsieve
