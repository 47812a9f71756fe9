#pragma once

#include <vector>

#include "pdfsieve/common.hpp"

namespace pdfsieve {

// Integer indicator filters. delta(numerator, divisor, offset) decides, in
// exact integer arithmetic, whether numerator/divisor - offset is a
// non-negative integer. The detecting products elsewhere in the library are
// built from brackets of the form (1 - delta(n, p, p)): such a bracket
// vanishes exactly when p divides n and n >= p*p, so the prime p itself is
// never filtered out by its own bracket.

struct DeltaArg {
  i64 numerator = 0;
  i64 divisor = 1;  // >= 1
  i64 offset = 0;
};

/// 1 iff divisor | numerator and numerator / divisor >= offset.
/// divisor < 1 is a domain error.
int delta(i64 numerator, i64 divisor, i64 offset);
int delta(const DeltaArg& arg);

/// One bracket of the detecting product: 1 - delta(n, p, p).
/// Zero exactly when p divides n and n >= p*p.
int sieve_factor(u64 n, u64 p);

struct CollapsePair {
  int lhs = 0;  // product of the individual delta factors
  int rhs = 0;  // single collapsed delta factor
};

/// Evaluates both sides of the product-collapse identity
///
///   delta(n,p_1,p_1) * ... * delta(n,p_i,p_i) * delta(n,q,q)
///     = delta(n, p_1*...*p_i*q, ceil(q / (p_1*...*p_i)))
///
/// for distinct primes p_1 < ... < p_i < q. Both evaluations are returned so
/// callers can assert they agree. The pivot q must be strictly larger than
/// every other prime in the list; violations are reported as contract errors.
CollapsePair collapse_check(u64 n, const std::vector<u64>& small_primes, u64 pivot);

/// Exact count / total pair.
struct Ratio {
  u64 num = 0;
  u64 den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// (1/N) * #{2 <= m <= N : delta(m + s, q, r) = 1}. For fixed s and r the
/// value approaches 1/q as N grows: the filter fires on one residue class
/// mod q, shifted but not thinned by the offset.
Ratio empirical_delta_density(i64 q, i64 s, i64 r, u64 n_limit);

}  // namespace pdfsieve
