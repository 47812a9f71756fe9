#include "pdfsieve/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <vector>

namespace pdfsieve {

std::string format_sig(double v, int significant) {
  std::array<char, 64> buf;
  const int len = std::snprintf(buf.data(), buf.size(), "%.*g", significant, v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

namespace {

std::vector<std::array<std::string, 7>> render(std::span<const CsvRow> rows) {
  std::vector<std::array<std::string, 7>> cells;
  cells.reserve(rows.size());
  for (const CsvRow& r : rows)
    cells.push_back({r.kind, std::to_string(r.k_or_gap), std::to_string(r.n),
                     format_sig(r.empirical), format_sig(r.theoretical),
                     format_sig(r.abs_error), format_sig(r.ratio)});
  return cells;
}

}  // namespace

void write_csv(std::ostream& os, std::span<const CsvRow> rows) {
  os << kCsvHeader << '\n';
  for (const auto& c : render(rows)) {
    os << c[0];
    for (std::size_t i = 1; i < c.size(); ++i) os << ',' << c[i];
    os << '\n';
  }
}

void write_table(std::ostream& os, std::span<const CsvRow> rows) {
  static constexpr std::array<const char*, 7> head = {
      "kind", "k_or_gap", "n", "empirical", "theoretical", "abs_error", "ratio"};
  const auto cells = render(rows);
  std::array<std::size_t, 7> width{};
  for (std::size_t i = 0; i < 7; ++i) width[i] = std::string(head[i]).size();
  for (const auto& c : cells)
    for (std::size_t i = 0; i < 7; ++i) width[i] = std::max(width[i], c[i].size());
  const auto line = [&](const auto& get) {
    for (std::size_t i = 0; i < 7; ++i) {
      const std::string v = get(i);
      os << v << std::string(width[i] - v.size(), ' ');
      os << (i + 1 < 7 ? "  " : "");
    }
    os << '\n';
  };
  line([&](std::size_t i) { return std::string(head[i]); });
  for (const auto& c : cells) line([&](std::size_t i) { return c[i]; });
}

}  // namespace pdfsieve
