#pragma once

#include <cstdint>
#include <stdexcept>

namespace pdfsieve {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Thrown when a computation would exceed its configured memory budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 0 -> number of hardware threads (at least 1).
unsigned resolve_threads(unsigned requested);

/// floor(sqrt(n)), exact.
u64 isqrt(u64 n);

namespace detail {

/// Mask with the low `nbits` bits set, nbits in [0, 64].
inline u64 low_mask(unsigned nbits) {
  return nbits >= 64 ? ~u64{0} : (u64{1} << nbits) - 1;
}

}  // namespace detail

}  // namespace pdfsieve
