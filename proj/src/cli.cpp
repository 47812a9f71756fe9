#include "pdfsieve/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "pdfsieve/analytics.hpp"
#include "pdfsieve/io.hpp"
#include "pdfsieve/pairs.hpp"
#include "pdfsieve/sieve.hpp"

namespace pdfsieve {

namespace {

constexpr long double kTwinConstantReference = 0.66016181584686957392781211L;
constexpr double kBrunConstant = 1.9021604;

std::ofstream open_output(const std::string& path, std::ios_base::openmode mode) {
  std::ofstream f(path, mode);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  return f;
}

void emit(std::ostream& os, const std::string& format, const std::vector<CsvRow>& rows) {
  if (format == "text")
    write_table(os, rows);
  else
    write_csv(os, rows);
}

std::vector<u64> resolve_checkpoints(const RunConfig& cfg, bool auto_grid) {
  std::vector<u64> cps = cfg.checkpoints;
  if (cps.empty()) cps = auto_grid ? auto_checkpoints(cfg.n_max) : std::vector<u64>{cfg.n_max};
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i > 0 && cps[i] <= cps[i - 1])
      throw std::invalid_argument("checkpoints must be strictly increasing");
    if (cps[i] > cfg.n_max) throw std::invalid_argument("checkpoint beyond --n");
  }
  return cps;
}

SieveOptions sieve_options(const RunConfig& cfg) {
  SieveOptions opts;
  if (cfg.segment_size > 0) opts.segment_size = cfg.segment_size;
  opts.threads = cfg.threads;
  if (cfg.memory_budget_mb > 0) opts.memory_budget_bytes = cfg.memory_budget_mb << 20;
  return opts;
}

int run_primes(const RunConfig& cfg, bool auto_grid, std::ostream& out) {
  if (cfg.n_max < 2) throw std::invalid_argument("primes: --n must be >= 2");
  const bool want_series = auto_grid || cfg.list_pi || !cfg.checkpoints.empty();
  const SieveBits bits = segmented_sieve(cfg.n_max, sieve_options(cfg));

  if (!cfg.bitmap_path.empty()) {
    auto f = open_output(cfg.bitmap_path, std::ios::binary);
    bits.write_bitmap(f);
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file = open_output(cfg.out_path, std::ios::out);
    os = &file;
  }

  if (want_series) {
    std::vector<CsvRow> rows;
    for (u64 cp : resolve_checkpoints(cfg, auto_grid)) {
      const u64 count = bits.count_up_to(cp);
      const double c = static_cast<double>(count);
      const double log_n = std::log(static_cast<double>(cp));
      const double theo = static_cast<double>(cp) / log_n;
      rows.push_back({"pi", 0, cp, c, theo, std::fabs(c - theo),
                      c * log_n / static_cast<double>(cp)});
    }
    emit(*os, cfg.format, rows);
  } else if (cfg.bitmap_path.empty()) {
    bits.write_primes_text(*os);
  }
  return 0;
}

int run_pairs(const RunConfig& cfg, bool auto_grid, std::ostream& out) {
  if (cfg.gap < 2 || cfg.gap % 2 != 0)
    throw std::invalid_argument("pairs: --gap must be a positive even number");
  if (cfg.n_max < 3) throw std::invalid_argument("pairs: --n must be >= 3");
  const u64 half_gap = cfg.gap / 2;
  const SieveOptions opts = sieve_options(cfg);
  const std::vector<u64> cps = resolve_checkpoints(cfg, auto_grid);

  const SieveBits bits = segmented_sieve(cfg.n_max + cfg.gap, opts);
  const std::vector<u64> counts = pair_count_series(bits, cps, half_gap);
  const long double c = twin_constant_cached(cfg.p_max, opts);
  const long double s = singular_series(half_gap);

  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const double actual = static_cast<double>(counts[i]);
    const double nn = static_cast<double>(cps[i]);
    const double li = li2(nn);
    const double pred = static_cast<double>(2.0L * c * s) * li;
    rows.push_back({"pairs", cfg.gap, cps[i], actual, pred, std::fabs(actual - pred),
                    actual / pred});
    const double log_n = std::log(nn);
    const double pred_nlog = static_cast<double>(2.0L * c * s) * nn / (log_n * log_n);
    rows.push_back({"pairs_nlog", cfg.gap, cps[i], actual, pred_nlog,
                    std::fabs(actual - pred_nlog), actual / pred_nlog});
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file = open_output(cfg.out_path, std::ios::out);
    os = &file;
  }
  emit(*os, cfg.format, rows);
  return 0;
}

int run_density(const RunConfig& cfg, bool auto_grid, std::ostream& out) {
  if (cfg.k < 1) throw std::invalid_argument("density: --k must be >= 1");
  if (cfg.n_max < 3) throw std::invalid_argument("density: --n must be >= 3");
  const std::vector<u64> cps = resolve_checkpoints(cfg, auto_grid);
  const long double theo_base = theoretical_density(cfg.k);
  const long double theo_twin = twin_theoretical_density(cfg.k);
  const long double theo_ratio = ratio_target(cfg.k);

  std::vector<CsvRow> rows;
  for (u64 cp : cps) {
    const u64 base = pi_k(cp, cfg.k);
    const u64 twin = pi_twin_k(cp, cfg.k);
    const long double nn = static_cast<long double>(cp);
    const double emp_base = static_cast<double>(static_cast<long double>(base) / nn);
    const double emp_twin = static_cast<double>(static_cast<long double>(twin) / nn);
    const double emp_ratio = static_cast<double>(
        (static_cast<long double>(twin) / nn) * (nn / static_cast<long double>(base)) *
        (nn / static_cast<long double>(base)));
    rows.push_back({"density", cfg.k, cp, emp_base, static_cast<double>(theo_base),
                    std::fabs(emp_base - static_cast<double>(theo_base)),
                    emp_base / static_cast<double>(theo_base)});
    rows.push_back({"twin_density", cfg.k, cp, emp_twin, static_cast<double>(theo_twin),
                    std::fabs(emp_twin - static_cast<double>(theo_twin)),
                    emp_twin / static_cast<double>(theo_twin)});
    rows.push_back({"ratio", cfg.k, cp, emp_ratio, static_cast<double>(theo_ratio),
                    std::fabs(emp_ratio - static_cast<double>(theo_ratio)),
                    emp_ratio / static_cast<double>(theo_ratio)});
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file = open_output(cfg.out_path, std::ios::out);
    os = &file;
  }
  emit(*os, cfg.format, rows);
  return 0;
}

int run_constants(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.want_twin && !cfg.want_singular && !cfg.want_brun)
    throw std::invalid_argument("constants: pick at least one of --twin, --singular, --brun");
  const SieveOptions opts = sieve_options(cfg);
  std::vector<CsvRow> rows;

  if (cfg.want_twin) {
    const double value = static_cast<double>(twin_constant(cfg.p_max, opts));
    const double ref = static_cast<double>(kTwinConstantReference);
    rows.push_back({"twin_constant", 0, cfg.p_max, value, ref, std::fabs(value - ref),
                    value / ref});
  }
  if (cfg.want_singular) {
    if (cfg.gap < 2 || cfg.gap % 2 != 0)
      throw std::invalid_argument("constants: --singular needs an even --gap");
    const double value = static_cast<double>(singular_series(cfg.gap / 2));
    rows.push_back({"singular_series", cfg.gap, 0, value, value, 0.0, 1.0});
  }
  if (cfg.want_brun) {
    if (cfg.n_max < 3) throw std::invalid_argument("constants: --brun needs --n >= 3");
    const double value = brun_partial(cfg.n_max, opts);
    rows.push_back({"brun_partial", 2, cfg.n_max, value, kBrunConstant,
                    std::fabs(value - kBrunConstant), value / kBrunConstant});
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file = open_output(cfg.out_path, std::ios::out);
    os = &file;
  }
  emit(*os, cfg.format, rows);
  return 0;
}

}  // namespace

std::vector<u64> auto_checkpoints(u64 n_max) {
  std::vector<u64> cps;
  for (u64 d = 1000; d <= n_max; d *= 10) {
    cps.push_back(d);
    if (d > n_max / 10) break;
  }
  if (cps.empty() || cps.back() != n_max) cps.push_back(n_max);
  return cps;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  bool auto_grid = false;

  CLI::App app{"prime detecting function sieve"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", cfg.out_path, "write results to this file instead of stdout");
  app.add_option("--format", cfg.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  app.add_option("--threads", cfg.threads, "worker threads (0 = all hardware threads)")
      ->envname("PDFSIEVE_THREADS");
  app.add_option("--segment-size", cfg.segment_size, "sieve segment size in numbers");
  app.add_option("--memory-budget-mb", cfg.memory_budget_mb, "sieve memory budget in MiB");

  CLI::App* primes = app.add_subcommand("primes", "list primes, export the bitmap, or tabulate pi");
  primes->add_option("--n", cfg.n_max, "upper limit")->required();
  primes->add_option("--checkpoints", cfg.checkpoints, "comma-separated checkpoint list")
      ->delimiter(',');
  primes->add_flag("--auto", auto_grid, "decade checkpoint grid up to --n");
  primes->add_flag("--pi", cfg.list_pi, "tabulate pi at checkpoints instead of listing primes");
  primes->add_option("--bitmap", cfg.bitmap_path, "write the primality bitmap to this file");

  CLI::App* pairs = app.add_subcommand("pairs", "prime pair counts vs predictions");
  pairs->add_option("--n", cfg.n_max, "upper limit")->required();
  pairs->add_option("--gap", cfg.gap, "even gap between the pair members")->required();
  pairs->add_option("--checkpoints", cfg.checkpoints, "comma-separated checkpoint list")
      ->delimiter(',');
  pairs->add_flag("--auto", auto_grid, "decade checkpoint grid up to --n");
  pairs->add_option("--pmax", cfg.p_max, "prime cutoff for the twin constant");

  CLI::App* density = app.add_subcommand("density", "detector densities and the ratio functional");
  density->add_option("--n", cfg.n_max, "upper limit")->required();
  density->add_option("--k", cfg.k, "basis size")->required();
  density->add_option("--checkpoints", cfg.checkpoints, "comma-separated checkpoint list")
      ->delimiter(',');
  density->add_flag("--auto", auto_grid, "decade checkpoint grid up to --n");

  CLI::App* constants = app.add_subcommand("constants", "twin constant, singular series, pair reciprocal sums");
  constants->add_flag("--twin", cfg.want_twin, "twin constant at --pmax");
  constants->add_flag("--singular", cfg.want_singular, "singular series factor for --gap");
  constants->add_flag("--brun", cfg.want_brun, "pair reciprocal partial sum up to --n");
  constants->add_option("--pmax", cfg.p_max, "prime cutoff for the twin constant");
  constants->add_option("--gap", cfg.gap, "even gap for --singular");
  constants->add_option("--n", cfg.n_max, "upper limit for --brun");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pdfsieve");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(primes)) return run_primes(cfg, auto_grid, out);
    if (app.got_subcommand(pairs)) return run_pairs(cfg, auto_grid, out);
    if (app.got_subcommand(density)) return run_density(cfg, auto_grid, out);
    return run_constants(cfg, out);
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace pdfsieve
