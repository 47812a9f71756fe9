#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pdfsieve/common.hpp"

namespace pdfsieve {

struct RunConfig {
  std::string command;
  u64 n_max = 0;
  std::size_t k = 0;
  u64 gap = 0;                   // full even gap
  std::vector<u64> checkpoints;  // empty -> auto decade grid up to n_max
  std::string format = "csv";    // csv | text
  std::string out_path;          // empty -> stdout
  std::string bitmap_path;
  u64 segment_size = 0;          // 0 -> default
  unsigned threads = 0;          // 0 -> PDFSIEVE_THREADS, then hardware
  u64 memory_budget_mb = 0;      // 0 -> default
  u64 p_max = 100'000'000;       // twin constant cutoff
  bool list_pi = false;
  bool want_twin = false;
  bool want_singular = false;
  bool want_brun = false;
};

/// Decades 1000, 10000, ... up to n_max, with n_max itself appended when it
/// is not a decade. Falls back to {n_max} when n_max < 1000.
std::vector<u64> auto_checkpoints(u64 n_max);

/// Parses args (without argv[0]) and runs the selected subcommand, writing
/// results to out and diagnostics to err. Returns the process exit code:
/// 0 success, 2 usage or domain error, 3 resource limit, 4 internal
/// invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdfsieve
