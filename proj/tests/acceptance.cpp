// Acceptance suite: one line per criterion, every tolerance pinned here.
// Criteria 1-9 are computed twice, with 1 and with 8 worker threads; the
// second pass feeds only the byte-identity check of criterion 12.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdfsieve/analytics.hpp"
#include "pdfsieve/io.hpp"
#include "pdfsieve/pairs.hpp"
#include "pdfsieve/realext.hpp"
#include "pdfsieve/sieve.hpp"

using namespace pdfsieve;

namespace {

constexpr double kTwinConstantReference = 0.66016181584686957;
constexpr double kBrunConstant = 1.9021604;

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int id, const std::string& name, bool pass, double secs, double limit,
            const std::string& detail) {
  if (limit > 0 && secs > limit) pass = false;
  char timing[64];
  if (limit > 0)
    std::snprintf(timing, sizeof timing, "(%.1fs, limit %.0fs)", secs, limit);
  else
    std::snprintf(timing, sizeof timing, "(%.1fs)", secs);
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << "  " << timing;
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << '\n' << std::flush;
  if (!pass) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double stop() const { return seconds_since(start); }
};

std::string fmt(double v) { return format_sig(v, 15); }

CsvRow pi_row(const std::string& kind, u64 n, u64 count) {
  const double c = static_cast<double>(count);
  const double log_n = std::log(static_cast<double>(n));
  const double theo = static_cast<double>(n) / log_n;
  return {kind, 0, n, c, theo, std::fabs(c - theo), c * log_n / static_cast<double>(n)};
}

/// Runs the criteria 1-9 computations with the given thread count. When
/// `checked` is true, verifies and reports each criterion; either way the
/// numeric artifacts are rendered into CSV rows for the determinism check.
std::string run_criteria(unsigned threads, bool checked) {
  SieveOptions opts;
  opts.threads = threads;
  std::vector<CsvRow> rows;

  // 1. detector-driven enumeration matches trial division up to 1e5
  {
    Timer t;
    const PrimeBasis scanned = recurrence_run(100000);
    const std::vector<u64> expected = oracle::primes_up_to(100000);
    const bool match = scanned.primes() == expected;
    rows.push_back(pi_row("pi_recurrence", 100000, scanned.size()));
    if (checked)
      report(1, "self-charging scan matches trial division up to 1e5", match, t.stop(), 5.0,
             match ? "" : "prime lists differ");
  }

  // 2. sieve count at 1e6
  {
    Timer t;
    const SieveBits bits = segmented_sieve(1000000, opts);
    const u64 count = bits.count_up_to(1000000);
    rows.push_back(pi_row("pi", 1000000, count));
    const double secs = t.stop();
    if (checked)
      report(2, "pi(1e6) = 78498 from the segmented sieve", count == 78498, secs, 10.0,
             count == 78498 ? "" : "count = " + std::to_string(count));
  }

  // 3./4. detector densities at 1e6 against the prime products,
  // |empirical - theoretical| <= primorial(k)/n + 1e-4
  const u64 primorial[] = {0, 2, 6, 30, 210, 2310, 30030};
  {
    Timer t;
    bool ok = true;
    std::string detail;
    for (std::size_t k = 1; k <= 6; ++k) {
      const DensityReport rep = density_report(k, 1000000);
      const double tol =
          static_cast<double>(primorial[k]) / 1000000.0 + 1e-4;
      rows.push_back({"density", k, 1000000, rep.empirical.value(),
                      static_cast<double>(rep.theoretical),
                      static_cast<double>(rep.abs_error()),
                      rep.empirical.value() / static_cast<double>(rep.theoretical)});
      if (static_cast<double>(rep.abs_error()) > tol) {
        ok = false;
        detail = "k=" + std::to_string(k) + " error " + fmt(static_cast<double>(rep.abs_error()));
      }
    }
    if (checked)
      report(3, "detector densities match the prime products at 1e6", ok, t.stop(), 60.0,
             detail);
  }
  {
    Timer t;
    bool ok = true;
    std::string detail;
    for (std::size_t k = 1; k <= 6; ++k) {
      const DensityReport rep = twin_density_report(k, 1000000);
      const double tol =
          static_cast<double>(primorial[k]) / 1000000.0 + 1e-4;
      rows.push_back({"twin_density", k, 1000000, rep.empirical.value(),
                      static_cast<double>(rep.theoretical),
                      static_cast<double>(rep.abs_error()),
                      rep.empirical.value() / static_cast<double>(rep.theoretical)});
      if (static_cast<double>(rep.abs_error()) > tol) {
        ok = false;
        detail = "k=" + std::to_string(k) + " error " + fmt(static_cast<double>(rep.abs_error()));
      }
    }
    if (checked)
      report(4, "twin detector densities match their products at 1e6", ok, t.stop(), 60.0,
             detail);
  }

  // 5. simplified and product twin forms agree exhaustively
  {
    Timer t;
    u64 mismatches = 0;
    for (std::size_t k = 1; k <= 8; ++k) {
      const PrimeBasis basis = PrimeBasis::first(k);
      for (u64 n = 3; n <= 100000; ++n)
        if (twin_pdf_simplified(n, basis) != twin_pdf_product(n, basis)) ++mismatches;
    }
    rows.push_back({"twin_forms_agree", 0, 100000, static_cast<double>(mismatches), 0.0,
                    static_cast<double>(mismatches), mismatches == 0 ? 1.0 : 0.0});
    if (checked)
      report(5, "block form equals product form for n <= 1e5, k <= 8", mismatches == 0,
             t.stop(), 0.0,
             mismatches == 0 ? "" : std::to_string(mismatches) + " mismatches");
  }

  // 6. ratio functional within 2% of its target at 1e7
  {
    Timer t;
    bool ok = true;
    std::string detail;
    for (std::size_t k = 1; k <= 6; ++k) {
      const double emp = ratio_empirical(k, 10000000);
      const double target = static_cast<double>(ratio_target(k));
      rows.push_back({"ratio", k, 10000000, emp, target, std::fabs(emp - target),
                      emp / target});
      if (std::fabs(emp / target - 1.0) > 0.02) {
        ok = false;
        detail = "k=" + std::to_string(k) + " ratio " + fmt(emp / target);
      }
    }
    if (checked)
      report(6, "ratio functional within 2% of its limit at 1e7", ok, t.stop(), 120.0, detail);
  }

  // 7. twin constant at p_max = 1e8 (the sieve also serves criterion 10)
  double c_twin = 0.0;
  SieveBits bits8;
  {
    Timer t;
    bits8 = segmented_sieve(100000000 + 2, opts);
    c_twin = static_cast<double>(twin_constant(bits8, 100000000));
    rows.push_back({"twin_constant", 0, 100000000, c_twin, kTwinConstantReference,
                    std::fabs(c_twin - kTwinConstantReference),
                    c_twin / kTwinConstantReference});
    const bool ok = std::fabs(c_twin - kTwinConstantReference) <= 1e-8;
    if (checked)
      report(7, "twin constant at p_max = 1e8 within 1e-8 of the reference", ok, t.stop(), 30.0,
             "value " + fmt(c_twin));
  }

  // 8./9. pair counts at 1e7: twin count against the integral prediction,
  // and the gap-6 count at twice the twin count
  {
    Timer t;
    const SieveBits bits7 = segmented_sieve(10000000 + 6, opts);
    HLOptions hl;
    hl.c_twin = c_twin;
    hl.bits = &bits7;
    const HLPrediction p = hl_prediction(10000000, 1, hl);
    rows.push_back({"pairs", 2, 10000000, static_cast<double>(p.actual), p.predicted,
                    std::fabs(static_cast<double>(p.actual) - p.predicted), p.ratio});
    if (checked)
      report(8, "pi_twin(1e7) within 5% of 2 c li2(1e7)", p.ratio >= 0.95 && p.ratio <= 1.05,
             t.stop(), 120.0, "ratio " + fmt(p.ratio));

    Timer t9;
    const u64 twin = pi_twin(bits7, 10000000);
    const u64 gap6 = pi_pair(bits7, 10000000, 3);
    const double ratio = static_cast<double>(gap6) / static_cast<double>(twin);
    rows.push_back({"pair_ratio_gap6", 6, 10000000, ratio, 2.0, std::fabs(ratio - 2.0),
                    ratio / 2.0});
    if (checked)
      report(9, "gap-6 pairs outnumber twins by the singular factor 2 at 1e7",
             ratio >= 1.9 && ratio <= 2.1, t9.stop(), 0.0, "ratio " + fmt(ratio));
  }

  // 10./11. run only in the checked pass; they feed no CSV rows
  if (checked) {
    {
      Timer t;
      const std::vector<u64> decades = {1000, 10000, 100000, 1000000, 10000000, 100000000};
      const std::vector<double> sums = brun_partial_series(bits8, decades);
      const std::vector<u64> twins = pair_count_series(bits8, decades, 1);
      bool ok = true;
      std::string detail;
      double prev = 0.0;
      for (std::size_t i = 0; i < decades.size(); ++i) {
        if (sums[i] < prev || sums[i] >= kBrunConstant) {
          ok = false;
          detail = "partial sum " + fmt(sums[i]) + " at " + std::to_string(decades[i]);
        }
        prev = sums[i];
        const double bound = brun_upper_bound(static_cast<double>(decades[i]), c_twin);
        if (static_cast<double>(twins[i]) > bound) {
          ok = false;
          detail = "twin count above bound at " + std::to_string(decades[i]);
        }
      }
      report(10, "reciprocal sums below 1.9021604 and twin counts below their bound", ok,
             t.stop(), 0.0, detail);
    }
    {
      Timer t;
      const InterpolatedPi ip(10000, opts);
      bool ok = true;
      std::string detail;
      for (u64 m = 2; m <= 9999 && ok; ++m)
        if (ip.pi_hat(static_cast<double>(m)) != static_cast<double>(ip.pi_int(m))) {
          ok = false;
          detail = "pi_hat mismatch at " + std::to_string(m);
        }
      for (u64 m = 2; m <= 9998 && ok; m += 7)
        for (double frac : {0.25, 0.5, 0.75}) {
          const double x = static_cast<double>(m) + frac;
          const auto [slope, bit] = ip.left_derivative_check(x, frac / 2);
          if (slope != static_cast<double>(bit)) {
            ok = false;
            detail = "slope mismatch at " + fmt(x);
            break;
          }
        }
      for (u64 m = 2; m <= 9998 && ok; m += 13)
        for (double frac : {0.0, 0.5}) {
          const double x = static_cast<double>(m) + frac;
          if (std::fabs(ip.integrate_pdf_real(x) - ip.pi_hat(x)) > 1e-12) {
            ok = false;
            detail = "integral mismatch at " + fmt(x);
            break;
          }
        }
      report(11, "real extension: interpolation, left slope, and integral agree at 1e4", ok,
             t.stop(), 0.0, detail);
    }
  }

  std::ostringstream csv;
  write_csv(csv, rows);
  return csv.str();
}

}  // namespace

int main() {
  std::cout << "acceptance suite, thread counts 1 and 8\n";
  const std::string csv_one = run_criteria(1, true);

  Timer t12;
  const std::string csv_eight = run_criteria(8, false);
  report(12, "criteria 1-9 CSV byte-identical with 1 and 8 threads", csv_one == csv_eight,
         t12.stop(), 0.0, csv_one == csv_eight ? "" : "outputs differ");

  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
