#pragma once

#include <span>
#include <string_view>

namespace mcbdqm::cli {

/// One published value. `key` is the time level (tables 2, 3, 5, 7) or the
/// grid spacing (tables 4, 6).
struct BaselineRow {
  double key;
  std::string_view metric;  // "L2", "Linf", "RMS", "order_L2", "order_Linf"
  double value;
  std::string_view source;  // "MCB-DQM" or the comparator column
};

struct BaselineTable {
  int id;
  std::string_view caption;
  std::span<const BaselineRow> rows;
};

/// Tables 2-7 as published. Throws std::out_of_range for other ids.
const BaselineTable& baseline_table(int id);

/// Published value for (key, metric, source), or nullptr.
const BaselineRow* find_baseline(const BaselineTable& table, double key, std::string_view metric,
                                 std::string_view source = "MCB-DQM");

}  // namespace mcbdqm::cli
