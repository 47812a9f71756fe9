#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "pdfsieve/common.hpp"

namespace pdfsieve {

/// Shortest decimal with `significant` significant digits, C locale
/// regardless of the global locale.
std::string format_sig(double v, int significant = 15);

struct CsvRow {
  std::string kind;
  u64 k_or_gap = 0;
  u64 n = 0;
  double empirical = 0;
  double theoretical = 0;
  double abs_error = 0;
  double ratio = 0;
};

inline constexpr const char* kCsvHeader = "kind,k_or_gap,n,empirical,theoretical,abs_error,ratio";

/// Header line plus one comma-separated line per row, numeric fields at 15
/// significant digits.
void write_csv(std::ostream& os, std::span<const CsvRow> rows);

/// Space-aligned table with the same columns and digits.
void write_table(std::ostream& os, std::span<const CsvRow> rows);

}  // namespace pdfsieve
