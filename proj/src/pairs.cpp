#include "pdfsieve/pairs.hpp"

#include <bit>
#include <stdexcept>

namespace pdfsieve {

namespace {

/// Word i of the prime bit stream shifted down by `gap` bits, i.e. bit b of
/// the result is the primality bit of 64*i + b + gap. Bits past the end of
/// the bitmap read as zero.
inline u64 shifted_word(const std::vector<u64>& words, u64 i, u64 gap) {
  const u64 q = gap >> 6;
  const unsigned r = static_cast<unsigned>(gap & 63);
  const u64 lo = (i + q < words.size()) ? words[i + q] : 0;
  if (r == 0) return lo;
  const u64 hi = (i + q + 1 < words.size()) ? words[i + q + 1] : 0;
  return (lo >> r) | (hi << (64 - r));
}

}  // namespace

int twin_pdf_product(u64 n, const PrimeBasis& basis) {
  if (n < 3) throw std::invalid_argument("twin_pdf_product: n must be >= 3");
  return pdf_eval(n, basis) & pdf_eval(n + 2, basis);
}

int twin_pdf_simplified(u64 n, const PrimeBasis& basis) {
  if (n < 3) throw std::invalid_argument("twin_pdf_simplified: n must be >= 3");
  const auto& ps = basis.primes();
  if (ps.empty() || ps.front() != 2)
    throw std::invalid_argument("twin_pdf_simplified: basis must start at 2");
  if (n % 2 == 0 && n >= 4) return 0;  // p = 2 block: single bracket at n
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const u64 p = ps[i];
    const u64 p2 = p * p;
    if (p2 > n + 2) break;
    const u64 rem = n % p;
    const int d1 = (rem == 0 && n >= p2) ? 1 : 0;
    const int d2 = ((rem + 2) % p == 0 && n + 2 >= p2) ? 1 : 0;
    if (d1 && d2) throw std::logic_error("twin_pdf_simplified: both deltas fired in one block");
    if (d1 | d2) return 0;
  }
  return 1;
}

int pair_pdf(u64 n, const PairSpec& spec) {
  if (n < 3) throw std::invalid_argument("pair_pdf: n must be >= 3");
  if (spec.half_gap < 1) throw std::invalid_argument("pair_pdf: half_gap must be >= 1");
  const auto& ps = spec.basis.primes();
  if (ps.empty() || ps.front() != 2)
    throw std::invalid_argument("pair_pdf: basis must start at 2");
  const u64 gap = 2 * spec.half_gap;
  if (n % 2 == 0 && n >= 4) return 0;
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const u64 p = ps[i];
    const u64 p2 = p * p;
    if (p2 > n + gap) break;
    const u64 rem = n % p;
    if (spec.half_gap % p == 0) {
      if (rem == 0 && n >= p2) return 0;  // single bracket at n
      continue;
    }
    const int d1 = (rem == 0 && n >= p2) ? 1 : 0;
    const int d2 = ((rem + gap % p) % p == 0 && n + gap >= p2) ? 1 : 0;
    if (d1 && d2) throw std::logic_error("pair_pdf: both deltas fired in one block");
    if (d1 | d2) return 0;
  }
  return 1;
}

int pair_pdf_full(u64 n, u64 half_gap) {
  if (n < 3) throw std::invalid_argument("pair_pdf_full: n must be >= 3");
  if (half_gap < 1) throw std::invalid_argument("pair_pdf_full: half_gap must be >= 1");
  PairSpec spec;
  spec.half_gap = half_gap;
  spec.basis = PrimeBasis::up_to(std::max<u64>(2, isqrt(n + 2 * half_gap)));
  return pair_pdf(n, spec);
}

u64 pi_twin(const SieveBits& bits, u64 n) { return pi_pair(bits, n, 1); }

u64 pi_twin(u64 n, const SieveOptions& opts) { return pi_pair(n, 1, opts); }

u64 pi_twin_k(u64 n, std::size_t k) {
  if (n < 3) throw std::invalid_argument("pi_twin_k: n must be >= 3");
  if (k < 1) throw std::invalid_argument("pi_twin_k: k must be >= 1");
  const PrimeBasis basis = PrimeBasis::first(k);
  u64 count = 0;
  for (u64 m = 3; m <= n; ++m) count += static_cast<u64>(twin_pdf_simplified(m, basis));
  return count;
}

u64 pi_pair(const SieveBits& bits, u64 n, u64 half_gap) {
  if (n < 3) throw std::invalid_argument("pi_pair: n must be >= 3");
  if (half_gap < 1) throw std::invalid_argument("pi_pair: half_gap must be >= 1");
  const u64 gap = 2 * half_gap;
  if (n + gap > bits.n_max())
    throw std::invalid_argument("pi_pair: sieve must cover n + 2*half_gap");
  const auto& words = bits.words();
  const u64 w_n = n >> 6;
  u64 count = 0;
  for (u64 i = 0; i < w_n; ++i)
    count += static_cast<u64>(std::popcount(words[i] & shifted_word(words, i, gap)));
  const u64 mask = detail::low_mask(static_cast<unsigned>((n & 63) + 1));
  count += static_cast<u64>(std::popcount(words[w_n] & shifted_word(words, w_n, gap) & mask));
  return count;
}

u64 pi_pair(u64 n, u64 half_gap, const SieveOptions& opts) {
  if (n < 3) throw std::invalid_argument("pi_pair: n must be >= 3");
  if (half_gap < 1) throw std::invalid_argument("pi_pair: half_gap must be >= 1");
  const SieveBits bits = segmented_sieve(n + 2 * half_gap, opts);
  return pi_pair(bits, n, half_gap);
}

std::vector<u64> pair_count_series(const SieveBits& bits, const std::vector<u64>& checkpoints,
                                   u64 half_gap) {
  if (checkpoints.empty()) throw std::invalid_argument("pair_count_series: need a checkpoint");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("pair_count_series: checkpoints must be strictly increasing");
  if (checkpoints.front() < 3)
    throw std::invalid_argument("pair_count_series: checkpoints must be >= 3");
  if (half_gap < 1) throw std::invalid_argument("pair_count_series: half_gap must be >= 1");
  const u64 gap = 2 * half_gap;
  if (checkpoints.back() + gap > bits.n_max())
    throw std::invalid_argument("pair_count_series: sieve must cover back() + 2*half_gap");

  const auto& words = bits.words();
  std::vector<u64> counts;
  counts.reserve(checkpoints.size());
  u64 running = 0;
  u64 next_word = 0;
  for (u64 cp : checkpoints) {
    const u64 w = cp >> 6;
    while (next_word < w) {
      running += static_cast<u64>(
          std::popcount(words[next_word] & shifted_word(words, next_word, gap)));
      ++next_word;
    }
    const u64 mask = detail::low_mask(static_cast<unsigned>((cp & 63) + 1));
    counts.push_back(running + static_cast<u64>(
                                   std::popcount(words[w] & shifted_word(words, w, gap) & mask)));
  }
  return counts;
}

}  // namespace pdfsieve
