#include "pdfsieve/analytics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pdfsieve/pairs.hpp"

namespace pdfsieve {

namespace {

inline void kahan_add(long double& sum, long double& comp, long double term) {
  const long double y = term - comp;
  const long double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

double inv_log_sq(double t) {
  const double l = std::log(t);
  return 1.0 / (l * l);
}

double adaptive_simpson(double (*f)(double), double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m));
  const double frm = f(0.5 * (m + b));
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::fabs(err) <= 15.0 * tol) return left + right + err / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

long double theoretical_density(std::size_t k) {
  if (k < 1) throw std::invalid_argument("theoretical_density: k must be >= 1");
  const PrimeBasis basis = PrimeBasis::first(k);
  long double sum = 0, comp = 0;
  for (u64 p : basis.primes())
    kahan_add(sum, comp, std::log1p(-1.0L / static_cast<long double>(p)));
  return std::exp(sum);
}

long double twin_theoretical_density(std::size_t k) {
  if (k < 1) throw std::invalid_argument("twin_theoretical_density: k must be >= 1");
  const PrimeBasis basis = PrimeBasis::first(k);
  long double sum = 0, comp = 0;
  for (std::size_t i = 1; i < basis.size(); ++i)
    kahan_add(sum, comp, std::log1p(-2.0L / static_cast<long double>(basis.primes()[i])));
  return 0.5L * std::exp(sum);
}

long double ratio_target(std::size_t k) {
  if (k < 1) throw std::invalid_argument("ratio_target: k must be >= 1");
  const PrimeBasis basis = PrimeBasis::first(k);
  long double sum = 0, comp = 0;
  for (std::size_t i = 1; i < basis.size(); ++i) {
    const long double d = static_cast<long double>(basis.primes()[i]) - 1.0L;
    kahan_add(sum, comp, std::log1p(-1.0L / (d * d)));
  }
  return 2.0L * std::exp(sum);
}

double ratio_empirical(std::size_t k, u64 n) {
  const u64 twin = pi_twin_k(n, k);
  const u64 base = pi_k(n, k);
  const long double nn = static_cast<long double>(n);
  const long double b = static_cast<long double>(base);
  return static_cast<double>((static_cast<long double>(twin) / nn) * (nn / b) * (nn / b));
}

long double twin_constant(const SieveBits& bits, u64 p_max) {
  if (p_max < 3) throw std::invalid_argument("twin_constant: p_max must be >= 3");
  if (p_max > bits.n_max())
    throw std::invalid_argument("twin_constant: sieve does not cover p_max");
  long double sum = 0, comp = 0;
  bits.for_each_prime(3, p_max, [&](u64 p) {
    const long double d = static_cast<long double>(p) - 1.0L;
    kahan_add(sum, comp, std::log1p(-1.0L / (d * d)));
  });
  return std::exp(sum);
}

long double twin_constant(u64 p_max, const SieveOptions& opts) {
  if (p_max < 3) throw std::invalid_argument("twin_constant: p_max must be >= 3");
  const SieveBits bits = segmented_sieve(p_max, opts);
  return twin_constant(bits, p_max);
}

long double twin_constant_cached(u64 p_max, const SieveOptions& opts) {
  static std::map<u64, long double> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(p_max);
    if (it != cache.end()) return it->second;
  }
  const long double value = twin_constant(p_max, opts);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(p_max, value);
  return value;
}

long double singular_series(u64 half_gap) {
  if (half_gap < 1) throw std::invalid_argument("singular_series: half_gap must be >= 1");
  long double prod = 1.0L;
  u64 m = half_gap;
  while (m % 2 == 0) m /= 2;
  for (u64 p = 3; p * p <= m; p += 2) {
    if (m % p != 0) continue;
    prod *= static_cast<long double>(p - 1) / static_cast<long double>(p - 2);
    while (m % p == 0) m /= p;
  }
  if (m > 1) prod *= static_cast<long double>(m - 1) / static_cast<long double>(m - 2);
  return prod;
}

double li2(double x) {
  if (!(x >= 2.0)) throw std::invalid_argument("li2: domain is x >= 2");
  if (x == 2.0) return 0.0;
  const double a = 2.0;
  const double fa = inv_log_sq(a);
  const double fb = inv_log_sq(x);
  const double fm = inv_log_sq(0.5 * (a + x));
  const double whole = (x - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = std::max(1e-13 * std::fabs(whole), 1e-15);
  return adaptive_simpson(&inv_log_sq, a, x, fa, fm, fb, whole, tol, 48);
}

long double DensityReport::abs_error() const {
  return std::fabs(static_cast<long double>(empirical.value()) - theoretical);
}

DensityReport density_report(std::size_t k, u64 n) {
  DensityReport rep;
  rep.k = k;
  rep.n = n;
  rep.empirical = Ratio{pi_k(n, k), n};
  rep.theoretical = theoretical_density(k);
  return rep;
}

DensityReport twin_density_report(std::size_t k, u64 n) {
  DensityReport rep;
  rep.k = k;
  rep.n = n;
  rep.empirical = Ratio{pi_twin_k(n, k), n};
  rep.theoretical = twin_theoretical_density(k);
  return rep;
}

HLPrediction hl_prediction(u64 n, u64 half_gap, const HLOptions& opts) {
  if (n < 3) throw std::invalid_argument("hl_prediction: n must be >= 3");
  if (half_gap < 1) throw std::invalid_argument("hl_prediction: half_gap must be >= 1");
  const u64 gap = 2 * half_gap;
  SieveBits local;
  const SieveBits* bits = opts.bits;
  if (bits == nullptr) {
    local = segmented_sieve(n + gap, opts.sieve);
    bits = &local;
  }
  const long double c = opts.c_twin > 0
                            ? static_cast<long double>(opts.c_twin)
                            : twin_constant_cached(opts.c_twin_p_max, opts.sieve);
  const long double s = singular_series(half_gap);
  const double li = li2(static_cast<double>(n));

  HLPrediction out;
  out.half_gap = half_gap;
  out.n = n;
  out.c_twin = static_cast<double>(c);
  out.singular_factor = static_cast<double>(s);
  out.li2_value = li;
  out.predicted = static_cast<double>(2.0L * c * s * static_cast<long double>(li));
  out.actual = pi_pair(*bits, n, half_gap);
  out.ratio = static_cast<double>(out.actual) / out.predicted;
  return out;
}

std::vector<double> brun_partial_series(const SieveBits& bits,
                                        const std::vector<u64>& checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("brun_partial_series: need a checkpoint");
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("brun_partial_series: checkpoints must be strictly increasing");
  if (checkpoints.front() < 3)
    throw std::invalid_argument("brun_partial_series: checkpoints must be >= 3");
  if (checkpoints.back() + 2 > bits.n_max())
    throw std::invalid_argument("brun_partial_series: sieve must cover back() + 2");

  std::vector<double> sums;
  sums.reserve(checkpoints.size());
  long double sum = 0, comp = 0;
  std::size_t idx = 0;
  bits.for_each_prime(3, checkpoints.back(), [&](u64 p) {
    while (idx < checkpoints.size() && checkpoints[idx] < p) {
      sums.push_back(static_cast<double>(sum));
      ++idx;
    }
    if (bits.is_prime(p + 2)) {
      kahan_add(sum, comp, 1.0L / static_cast<long double>(p));
      kahan_add(sum, comp, 1.0L / static_cast<long double>(p + 2));
    }
  });
  while (idx < checkpoints.size()) {
    sums.push_back(static_cast<double>(sum));
    ++idx;
  }
  return sums;
}

double brun_partial(const SieveBits& bits, u64 n) {
  if (n < 3) throw std::invalid_argument("brun_partial: n must be >= 3");
  return brun_partial_series(bits, {n}).front();
}

double brun_partial(u64 n, const SieveOptions& opts) {
  if (n < 3) throw std::invalid_argument("brun_partial: n must be >= 3");
  const SieveBits bits = segmented_sieve(n + 2, opts);
  return brun_partial(bits, n);
}

double brun_upper_bound(double n, double c_twin) {
  if (!(n > 1.0)) throw std::invalid_argument("brun_upper_bound: n must be > 1");
  const double l = std::log(n);
  return 3.42 * 2.0 * c_twin * n / (l * l);
}

double pnt_ratio(const SieveBits& bits, u64 n) {
  if (n < 2) throw std::invalid_argument("pnt_ratio: n must be >= 2");
  return static_cast<double>(pi(bits, n)) * std::log(static_cast<double>(n)) /
         static_cast<double>(n);
}

double pnt_ratio(u64 n, const SieveOptions& opts) {
  if (n < 2) throw std::invalid_argument("pnt_ratio: n must be >= 2");
  const SieveBits bits = segmented_sieve(n, opts);
  return pnt_ratio(bits, n);
}

}  // namespace pdfsieve
