#include "pdfsieve/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "pdfsieve/pairs.hpp"

namespace pdfsieve {

namespace {

std::vector<u64> simple_primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<u8> composite(limit + 1, 0);
  for (u64 i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  for (u64 i = 2; i <= limit; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

inline void clear_bit(std::vector<u64>& words, u64 n) {
  words[n >> 6] &= ~(u64{1} << (n & 63));
}

}  // namespace

namespace detail {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

PrimeBasis::PrimeBasis(std::vector<u64> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) return;
  const std::vector<u64> expected = simple_primes_up_to(primes_.back());
  if (expected.size() != primes_.size() ||
      !std::equal(expected.begin(), expected.end(), primes_.begin()))
    throw std::invalid_argument("PrimeBasis: list must be exactly the first k primes");
}

PrimeBasis PrimeBasis::first(std::size_t k) {
  if (k == 0) return PrimeBasis{};
  // p_k < k (ln k + ln ln k) for k >= 6; pad and retry to be safe
  u64 bound = 16;
  if (k >= 6) {
    const double kk = static_cast<double>(k);
    bound = static_cast<u64>(kk * (std::log(kk) + std::log(std::log(kk))) * 1.2) + 16;
  }
  std::vector<u64> primes = simple_primes_up_to(bound);
  while (primes.size() < k) {
    bound *= 2;
    primes = simple_primes_up_to(bound);
  }
  primes.resize(k);
  return PrimeBasis(std::move(primes), unchecked_tag{});
}

PrimeBasis PrimeBasis::up_to(u64 limit) {
  return PrimeBasis(simple_primes_up_to(limit), unchecked_tag{});
}

u64 PrimeBasis::largest() const { return primes_.empty() ? 1 : primes_.back(); }

u64 PrimeBasis::next_prime() const {
  u64 c = largest() + 1;
  while (!detail::trial_division_prime(c)) ++c;
  return c;
}

u64 PrimeBasis::window_end() const {
  const u64 q = next_prime();
  return q * q - 1;
}

int pdf_eval(u64 n, const PrimeBasis& basis) {
  if (n < 2) throw std::invalid_argument("pdf_eval: n must be >= 2");
  for (u64 p : basis.primes()) {
    if (p * p > n) break;
    if (n % p == 0) return 0;
  }
  return 1;
}

int PdfState::step() {
  const u64 n = cursor_;
  int bit = 1;
  for (u64 p : found_) {
    if (p * p > n) break;
    if (n % p == 0) {
      bit = 0;
      break;
    }
  }
  if (bit) found_.push_back(n);
  ++cursor_;
  return bit;
}

void PdfState::run_to(u64 n_max) {
  while (cursor_ <= n_max) step();
}

PrimeBasis PdfState::take_basis() && {
  return PrimeBasis(std::move(found_), PrimeBasis::unchecked_tag{});
}

PrimeBasis recurrence_run(u64 n_max) {
  if (n_max < 2) throw std::invalid_argument("recurrence_run: n_max must be >= 2");
  PdfState state;
  state.run_to(n_max);
  return std::move(state).take_basis();
}

bool SieveBits::is_prime(u64 n) const {
  if (n > n_max_) throw std::out_of_range("SieveBits::is_prime: n beyond n_max");
  return (words_[n >> 6] >> (n & 63)) & 1;
}

u64 SieveBits::count_up_to(u64 n) const {
  if (n > n_max_) throw std::out_of_range("SieveBits::count_up_to: n beyond n_max");
  const u64 w = n >> 6;
  u64 count = 0;
  for (u64 i = 0; i < w; ++i) count += static_cast<u64>(std::popcount(words_[i]));
  count += static_cast<u64>(
      std::popcount(words_[w] & detail::low_mask(static_cast<unsigned>((n & 63) + 1))));
  return count;
}

std::vector<u64> SieveBits::to_primes() const {
  std::vector<u64> out;
  out.reserve(count_up_to(n_max_));
  for_each_prime(2, n_max_, [&](u64 p) { out.push_back(p); });
  return out;
}

void SieveBits::write_bitmap(std::ostream& os) const {
  os.write("PDFSIEVE", 8);
  u8 header[8];
  for (int i = 0; i < 8; ++i) header[i] = static_cast<u8>(n_max_ >> (8 * i));
  os.write(reinterpret_cast<const char*>(header), 8);
  const u64 n_bytes = n_max_ / 8 + 1;
  for (u64 j = 0; j < n_bytes; ++j) {
    const u8 byte = static_cast<u8>(words_[j >> 3] >> (8 * (j & 7)));
    os.put(static_cast<char>(byte));
  }
}

SieveBits SieveBits::read_bitmap(std::istream& is) {
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, "PDFSIEVE", 8) != 0)
    throw std::invalid_argument("read_bitmap: bad magic");
  u8 header[8];
  is.read(reinterpret_cast<char*>(header), 8);
  if (!is) throw std::invalid_argument("read_bitmap: truncated header");
  u64 n_max = 0;
  for (int i = 0; i < 8; ++i) n_max |= static_cast<u64>(header[i]) << (8 * i);
  SieveBits bits;
  bits.n_max_ = n_max;
  bits.words_.assign(n_max / 64 + 1, 0);
  const u64 n_bytes = n_max / 8 + 1;
  for (u64 j = 0; j < n_bytes; ++j) {
    const int c = is.get();
    if (c < 0) throw std::invalid_argument("read_bitmap: truncated bitmap");
    bits.words_[j >> 3] |= static_cast<u64>(static_cast<u8>(c)) << (8 * (j & 7));
  }
  return bits;
}

void SieveBits::write_primes_text(std::ostream& os) const {
  for_each_prime(2, n_max_, [&](u64 p) { os << p << '\n'; });
}

SieveBits segmented_sieve(u64 n_max, const SieveOptions& opts) {
  if (n_max < 2) throw std::invalid_argument("segmented_sieve: n_max must be >= 2");
  const u64 n_words = n_max / 64 + 1;
  if (n_words > opts.memory_budget_bytes / 8)
    throw resource_error("segmented_sieve: bit array for n_max=" + std::to_string(n_max) +
                         " needs " + std::to_string(n_words * 8) +
                         " bytes, over the budget of " +
                         std::to_string(opts.memory_budget_bytes) +
                         "; raise SieveOptions::memory_budget_bytes");

  SieveBits bits;
  bits.n_max_ = n_max;
  auto& words = bits.words_;
  words.assign(n_words, ~u64{0});
  clear_bit(words, 0);
  clear_bit(words, 1);
  for (u64 b = n_max + 1; b < n_words * 64; ++b) clear_bit(words, b);

  const std::vector<u64> base = simple_primes_up_to(isqrt(n_max));
  const u64 seg = std::max<u64>(1, opts.segment_size);

  // [lo, hi) in numbers; all bit writes stay within the owning word range as
  // long as lo and hi are word-aligned (or clamped to the global ends).
  const auto sieve_span = [&](u64 lo, u64 hi) {
    for (u64 seg_lo = lo; seg_lo < hi; seg_lo += seg) {
      const u64 seg_hi = std::min(hi, seg_lo + seg);
      for (u64 p : base) {
        const u64 p2 = p * p;
        if (p2 >= seg_hi) break;
        const u64 first_mult = ((seg_lo + p - 1) / p) * p;
        for (u64 m = std::max(p2, first_mult); m < seg_hi; m += p) clear_bit(words, m);
      }
    }
  };

  const unsigned threads = resolve_threads(opts.threads);
  if (threads <= 1 || n_words < 2 * threads) {
    sieve_span(0, n_max + 1);
  } else {
    const u64 words_per = (n_words + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const u64 w_lo = static_cast<u64>(t) * words_per;
      const u64 w_hi = std::min(n_words, w_lo + words_per);
      if (w_lo >= w_hi) break;
      pool.emplace_back(sieve_span, w_lo * 64, std::min(n_max + 1, w_hi * 64));
    }
    for (auto& th : pool) th.join();
  }
  return bits;
}

u64 pi(const SieveBits& bits, u64 n) {
  if (n < 2) throw std::invalid_argument("pi: n must be >= 2");
  return bits.count_up_to(n);
}

u64 pi(u64 n, const SieveOptions& opts) {
  if (n < 2) throw std::invalid_argument("pi: n must be >= 2");
  return segmented_sieve(n, opts).count_up_to(n);
}

u64 pi_k(u64 n, std::size_t k) {
  if (n < 2) throw std::invalid_argument("pi_k: n must be >= 2");
  if (k < 1) throw std::invalid_argument("pi_k: k must be >= 1");
  const PrimeBasis basis = PrimeBasis::first(k);
  std::vector<std::pair<u64, u64>> ps;  // (p, p*p)
  ps.reserve(basis.size());
  for (u64 p : basis.primes()) ps.emplace_back(p, p * p);
  u64 count = 0;
  for (u64 m = 2; m <= n; ++m) {
    bool pass = true;
    for (const auto& [p, p2] : ps) {
      if (p2 > m) break;
      if (m % p == 0) {
        pass = false;
        break;
      }
    }
    count += pass;
  }
  return count;
}

CountSeries count_series(CountKind kind, std::size_t k, u64 half_gap,
                         const std::vector<u64>& checkpoints, const SieveOptions& opts) {
  if (checkpoints.empty()) throw std::invalid_argument("count_series: need a checkpoint");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("count_series: checkpoints must be strictly increasing");
  const u64 min_n = (kind == CountKind::twin || kind == CountKind::pair) ? 3 : 2;
  if (checkpoints.front() < min_n)
    throw std::invalid_argument("count_series: checkpoint below the count's domain");

  CountSeries out;
  out.kind = kind;
  out.points.reserve(checkpoints.size());

  switch (kind) {
    case CountKind::pi: {
      const SieveBits bits = segmented_sieve(checkpoints.back(), opts);
      const auto& words = bits.words();
      u64 running = 0;
      u64 next_word = 0;
      for (u64 cp : checkpoints) {
        const u64 w = cp >> 6;
        while (next_word < w) running += static_cast<u64>(std::popcount(words[next_word++]));
        const u64 partial = static_cast<u64>(
            std::popcount(words[w] & detail::low_mask(static_cast<unsigned>((cp & 63) + 1))));
        out.points.emplace_back(cp, running + partial);
      }
      break;
    }
    case CountKind::pi_k: {
      if (k < 1) throw std::invalid_argument("count_series: pi_k needs k >= 1");
      out.k = k;
      const PrimeBasis basis = PrimeBasis::first(k);
      std::vector<std::pair<u64, u64>> ps;
      for (u64 p : basis.primes()) ps.emplace_back(p, p * p);
      u64 count = 0;
      std::size_t idx = 0;
      for (u64 m = 2; m <= checkpoints.back(); ++m) {
        bool pass = true;
        for (const auto& [p, p2] : ps) {
          if (p2 > m) break;
          if (m % p == 0) {
            pass = false;
            break;
          }
        }
        count += pass;
        while (idx < checkpoints.size() && checkpoints[idx] == m) {
          out.points.emplace_back(m, count);
          ++idx;
        }
      }
      break;
    }
    case CountKind::twin:
      half_gap = 1;
      [[fallthrough]];
    case CountKind::pair: {
      if (half_gap < 1) throw std::invalid_argument("count_series: pair needs half_gap >= 1");
      out.half_gap = half_gap;
      const SieveBits bits = segmented_sieve(checkpoints.back() + 2 * half_gap, opts);
      const std::vector<u64> counts = pair_count_series(bits, checkpoints, half_gap);
      for (std::size_t i = 0; i < checkpoints.size(); ++i)
        out.points.emplace_back(checkpoints[i], counts[i]);
      break;
    }
  }
  return out;
}

}  // namespace pdfsieve
