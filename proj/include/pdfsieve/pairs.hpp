#pragma once

#include <vector>

#include "pdfsieve/sieve.hpp"

namespace pdfsieve {

// Detectors for prime pairs (n, n + 2*half_gap). Two equivalent shapes are
// provided for twins: the plain product of the detectors at n and n + 2, and
// the simplified block form that merges the two brackets of each odd prime
// into 1 - delta(n,p,p) - delta(n+2,p,p). The merge is valid because an odd
// p cannot divide both n and n + 2, so at most one delta fires per block;
// both deltas firing at once is an internal invariant violation. For p = 2
// the two brackets collapse to the single bracket at n, since n and n + 2
// are even together.

/// A pair detector charged with a basis of initial primes.
struct PairSpec {
  u64 half_gap = 1;
  PrimeBasis basis;
};

/// pdf_eval(n) * pdf_eval(n + 2). n < 3 is a domain error.
int twin_pdf_product(u64 n, const PrimeBasis& basis);

/// Block form of the twin detector. The basis must start at 2.
int twin_pdf_simplified(u64 n, const PrimeBasis& basis);

/// General pair detector for gap 2*half_gap. Odd basis primes dividing
/// half_gap contribute a single bracket at n: for them, p | n and
/// p | n + 2*half_gap are the same event. That reduction is exact from
/// n >= p*p on; below the square the two sides of the pair can fall on
/// opposite sides of the zero-point boundary.
int pair_pdf(u64 n, const PairSpec& spec);

/// pair_pdf with a basis sized to classify n exactly: all primes up to
/// sqrt(n + 2*half_gap).
int pair_pdf_full(u64 n, u64 half_gap);

/// Number of primes p <= n with p + 2 prime (n >= 3). The sieve must cover
/// n + 2.
u64 pi_twin(const SieveBits& bits, u64 n);
u64 pi_twin(u64 n, const SieveOptions& opts = {});

/// Number of 3 <= m <= n passing the simplified twin detector over the
/// first k primes.
u64 pi_twin_k(u64 n, std::size_t k);

/// Number of primes p <= n with p + 2*half_gap prime. The sieve must cover
/// n + 2*half_gap.
u64 pi_pair(const SieveBits& bits, u64 n, u64 half_gap);
u64 pi_pair(u64 n, u64 half_gap, const SieveOptions& opts = {});

/// Pair counts at each checkpoint in one pass over the bitmap. Checkpoints
/// must be ascending, the last one + 2*half_gap within the sieve.
std::vector<u64> pair_count_series(const SieveBits& bits, const std::vector<u64>& checkpoints,
                                   u64 half_gap);

}  // namespace pdfsieve
