#pragma once

#include <bit>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "pdfsieve/common.hpp"

namespace pdfsieve {

namespace detail {

/// Trial-division primality, used only to validate externally supplied data.
bool trial_division_prime(u64 n);

}  // namespace detail

/// The first k primes, in order. Constructing one from an explicit list
/// verifies that the list really is the initial segment of the primes;
/// partial lists with gaps are rejected, because every detector built on a
/// basis assumes consecutive primes.
class PrimeBasis {
 public:
  PrimeBasis() = default;
  explicit PrimeBasis(std::vector<u64> primes);

  static PrimeBasis first(std::size_t k);
  static PrimeBasis up_to(u64 limit);

  const std::vector<u64>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }

  /// Largest basis prime; 1 for the empty basis.
  u64 largest() const;
  /// Smallest prime beyond the basis.
  u64 next_prime() const;
  /// next_prime()^2 - 1: the last n the detector product over this basis
  /// classifies exactly. Beyond it, composites with no basis prime factor
  /// slip through.
  u64 window_end() const;

 private:
  struct unchecked_tag {};
  PrimeBasis(std::vector<u64> primes, unchecked_tag) : primes_(std::move(primes)) {}

  std::vector<u64> primes_;

  friend class PdfState;
};

/// Detector product for n over the given basis: 1 iff no basis prime p has
/// p | n with n >= p*p. Equals the primality indicator for all
/// n <= basis.window_end(). n < 2 is a domain error.
int pdf_eval(u64 n, const PrimeBasis& basis);

/// Self-charging scan: classify n = 2, 3, ... with the detector over the
/// primes found so far, and append every n that passes. The empty product
/// accepts 2 and 3, which seeds the basis correctly, and from then on the
/// square window of the discovered primes always covers the cursor.
class PdfState {
 public:
  PdfState() = default;
  u64 cursor() const { return cursor_; }
  std::span<const u64> found() const { return found_; }

  /// Classifies cursor, charges it into the product when it passes, and
  /// advances. Returns the detector bit for the n just classified.
  int step();
  void run_to(u64 n_max);
  PrimeBasis take_basis() &&;

 private:
  std::vector<u64> found_;
  u64 cursor_ = 2;
};

/// Runs the self-charging scan over 2..n_max and returns the primes found.
PrimeBasis recurrence_run(u64 n_max);

struct SieveOptions {
  u64 segment_size = u64{1} << 21;  // numbers per segment
  unsigned threads = 0;             // 0 = all hardware threads
  u64 memory_budget_bytes = u64{256} << 20;
};

/// Primality bitmap for 0..n_max, one bit per integer, LSB-first within each
/// 64-bit word. Produced by segmented_sieve; the bit pattern is identical
/// regardless of thread count or segment size.
class SieveBits {
 public:
  u64 n_max() const { return n_max_; }
  const std::vector<u64>& words() const { return words_; }

  bool is_prime(u64 n) const;
  /// Number of primes <= n.
  u64 count_up_to(u64 n) const;
  std::vector<u64> to_primes() const;

  /// 16-byte header ("PDFSIEVE" magic, then n_max as a little-endian u64)
  /// followed by the raw bitmap, least significant bit first within each
  /// byte. Byte j holds the bits for 8j..8j+7.
  void write_bitmap(std::ostream& os) const;
  static SieveBits read_bitmap(std::istream& is);

  /// Newline-delimited decimal primes, one per line.
  void write_primes_text(std::ostream& os) const;

  /// Calls fn(p) for every prime p in [lo, hi], ascending.
  template <class Fn>
  void for_each_prime(u64 lo, u64 hi, Fn&& fn) const {
    if (hi > n_max_) hi = n_max_;
    if (lo < 2) lo = 2;
    if (lo > hi) return;
    for (u64 w = lo >> 6; w <= (hi >> 6); ++w) {
      u64 bits = words_[w];
      if (w == (lo >> 6)) bits &= ~detail::low_mask(static_cast<unsigned>(lo & 63));
      if (w == (hi >> 6)) bits &= detail::low_mask(static_cast<unsigned>((hi & 63) + 1));
      while (bits) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(bits));
        fn((w << 6) | b);
        bits &= bits - 1;
      }
    }
  }

  friend SieveBits segmented_sieve(u64 n_max, const SieveOptions& opts);

 private:
  u64 n_max_ = 0;
  std::vector<u64> words_;
};

/// Segmented bit-array sieve over 0..n_max. Every composite is cleared by
/// each of its prime factors p with p*p <= n, starting at p*p, which is the
/// same boundary the detector brackets use. Worker threads own disjoint
/// word-aligned ranges, so the result is bit-identical for any thread count
/// and any segment size. Throws resource_error when the bit array would
/// exceed opts.memory_budget_bytes.
SieveBits segmented_sieve(u64 n_max, const SieveOptions& opts = {});

/// Number of primes <= n, from a sieve (n >= 2).
u64 pi(const SieveBits& bits, u64 n);
u64 pi(u64 n, const SieveOptions& opts = {});

/// Number of 2 <= m <= n passing the detector over the first k primes.
/// Exceeds pi(n) beyond the basis window, since composites with least prime
/// factor above p_k are not filtered.
u64 pi_k(u64 n, std::size_t k);

enum class CountKind { pi, pi_k, twin, pair };

struct CountSeries {
  CountKind kind = CountKind::pi;
  std::size_t k = 0;   // basis size, pi_k only
  u64 half_gap = 0;    // pair only (twin is half_gap = 1)
  std::vector<std::pair<u64, u64>> points;  // (n, count), n ascending
};

/// Counts at each checkpoint in a single streaming pass. Checkpoints must be
/// strictly increasing; the minimum checkpoint is 2 for pi/pi_k and 3 for
/// twin/pair. k is used only for pi_k, half_gap only for pair.
CountSeries count_series(CountKind kind, std::size_t k, u64 half_gap,
                         const std::vector<u64>& checkpoints, const SieveOptions& opts = {});

}  // namespace pdfsieve
