#include "pdfsieve/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdfsieve {

int delta(i64 numerator, i64 divisor, i64 offset) {
  if (divisor < 1) throw std::invalid_argument("delta: divisor must be >= 1");
  if (numerator % divisor != 0) return 0;
  return numerator / divisor >= offset ? 1 : 0;
}

int delta(const DeltaArg& arg) { return delta(arg.numerator, arg.divisor, arg.offset); }

int sieve_factor(u64 n, u64 p) {
  return 1 - delta(static_cast<i64>(n), static_cast<i64>(p), static_cast<i64>(p));
}

CollapsePair collapse_check(u64 n, const std::vector<u64>& small_primes, u64 pivot) {
  std::vector<u64> sorted = small_primes;
  std::sort(sorted.begin(), sorted.end());
  u64 prod = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("collapse_check: small primes must be distinct");
    if (sorted[i] >= pivot)
      throw std::invalid_argument("collapse_check: pivot must be strictly larger than every small prime");
    prod *= sorted[i];
  }
  int lhs = delta(static_cast<i64>(n), static_cast<i64>(pivot), static_cast<i64>(pivot));
  for (u64 p : sorted)
    lhs &= delta(static_cast<i64>(n), static_cast<i64>(p), static_cast<i64>(p));
  const u64 ceil_quot = (pivot + prod - 1) / prod;
  const int rhs =
      delta(static_cast<i64>(n), static_cast<i64>(prod * pivot), static_cast<i64>(ceil_quot));
  return {lhs, rhs};
}

Ratio empirical_delta_density(i64 q, i64 s, i64 r, u64 n_limit) {
  if (q < 1) throw std::invalid_argument("empirical_delta_density: q must be >= 1");
  if (n_limit < static_cast<u64>(q))
    throw std::invalid_argument("empirical_delta_density: need n_limit >= q");
  u64 hits = 0;
  const i64 last = static_cast<i64>(n_limit);
  for (i64 m = 2; m <= last; ++m)
    hits += static_cast<u64>(delta(m + s, q, r));
  return Ratio{hits, n_limit};
}

}  // namespace pdfsieve
