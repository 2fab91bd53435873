#include "mcbdqm_cli/baselines.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcbdqm::cli {
namespace {

constexpr std::string_view kOurs = "MCB-DQM";
constexpr std::string_view kMittal = "Mittal & Bhatia";
constexpr std::string_view kDehghan = "Dehghan & Shokri";
constexpr std::string_view kLiMin = "Li-Min & Zong-Min";
constexpr std::string_view kJiang = "Jiang & Wang";
constexpr std::string_view kBratsos = "Bratsos";

// example 1 on [-1, 1], h = 0.04, dt = 1e-4
constexpr std::array<BaselineRow, 24> kTable2{{
    {0.25, "L2", 2.43e-6, kOurs},    {0.25, "Linf", 5.46e-6, kOurs},
    {0.50, "L2", 5.54e-6, kOurs},    {0.50, "Linf", 7.39e-6, kOurs},
    {0.75, "L2", 6.45e-6, kOurs},    {0.75, "Linf", 7.40e-6, kOurs},
    {1.00, "L2", 7.84e-6, kOurs},    {1.00, "Linf", 8.75e-6, kOurs},
    {0.25, "L2", 1.18e-5, kMittal},  {0.25, "Linf", 2.32e-5, kMittal},
    {0.50, "L2", 4.19e-5, kMittal},  {0.50, "Linf", 4.11e-5, kMittal},
    {0.75, "L2", 7.78e-5, kMittal},  {0.75, "Linf", 1.02e-4, kMittal},
    {1.00, "L2", 1.30e-4, kMittal},  {1.00, "Linf", 1.64e-4, kMittal},
    {0.25, "L2", 3.91e-5, kDehghan}, {0.25, "Linf", 5.89e-6, kDehghan},
    {0.50, "L2", 1.30e-4, kDehghan}, {0.50, "Linf", 2.01e-5, kDehghan},
    {0.75, "L2", 2.35e-4, kDehghan}, {0.75, "Linf", 3.63e-5, kDehghan},
    {1.00, "L2", 3.27e-4, kDehghan}, {1.00, "Linf", 5.07e-5, kDehghan},
}};

// example 1 on [-2, 2], h = dt = 0.01
constexpr std::array<BaselineRow, 40> kTable3{{
    {0.2, "Linf", 1.46e-6, kOurs},   {0.2, "RMS", 2.54e-8, kOurs},
    {0.4, "Linf", 2.97e-6, kOurs},   {0.4, "RMS", 5.67e-8, kOurs},
    {0.6, "Linf", 4.32e-6, kOurs},   {0.6, "RMS", 9.07e-8, kOurs},
    {0.8, "Linf", 5.46e-6, kOurs},   {0.8, "RMS", 1.25e-7, kOurs},
    {1.0, "Linf", 6.33e-6, kOurs},   {1.0, "RMS", 1.58e-7, kOurs},
    {0.2, "Linf", 9.25e-5, kLiMin},  {0.2, "RMS", 1.76e-5, kLiMin},
    {0.4, "Linf", 1.62e-4, kLiMin},  {0.4, "RMS", 1.62e-4, kLiMin},
    {0.6, "Linf", 3.73e-4, kLiMin},  {0.6, "RMS", 1.65e-4, kLiMin},
    {0.8, "Linf", 6.24e-4, kLiMin},  {0.8, "RMS", 2.98e-4, kLiMin},
    {1.0, "Linf", 8.49e-4, kLiMin},  {1.0, "RMS", 4.37e-4, kLiMin},
    {0.2, "Linf", 2.50e-5, kJiang},  {0.2, "RMS", 6.55e-7, kJiang},
    {0.4, "Linf", 4.20e-5, kJiang},  {0.4, "RMS", 1.15e-6, kJiang},
    {0.6, "Linf", 6.54e-5, kJiang},  {0.6, "RMS", 1.55e-6, kJiang},
    {0.8, "Linf", 4.01e-4, kJiang},  {0.8, "RMS", 3.92e-6, kJiang},
    {1.0, "Linf", 1.53e-3, kJiang},  {1.0, "RMS", 1.56e-5, kJiang},
    {0.2, "Linf", 2.26e-5, kMittal}, {0.2, "RMS", 2.69e-7, kMittal},
    {0.4, "Linf", 7.52e-5, kMittal}, {0.4, "RMS", 1.19e-6, kMittal},
    {0.6, "Linf", 1.55e-4, kMittal}, {0.6, "RMS", 2.96e-6, kMittal},
    {0.8, "Linf", 2.59e-4, kMittal}, {0.8, "RMS", 5.72e-6, kMittal},
    {1.0, "Linf", 3.84e-4, kMittal}, {1.0, "RMS", 9.56e-6, kMittal},
}};

// example 2 on [-3, 3] at t = 1, dt = 0.01 per the accompanying text
constexpr std::array<BaselineRow, 14> kTable4{{
    {0.04, "L2", 3.331197e-5, kOurs},  {0.04, "Linf", 3.743029e-5, kOurs},
    {0.02, "L2", 8.480206e-6, kOurs},  {0.02, "Linf", 9.640778e-6, kOurs},
    {0.02, "order_L2", 1.974, kOurs},  {0.02, "order_Linf", 1.957, kOurs},
    {0.01, "L2", 2.087315e-6, kOurs},  {0.01, "Linf", 2.385016e-6, kOurs},
    {0.01, "order_L2", 2.023, kOurs},  {0.01, "order_Linf", 2.015, kOurs},
    {0.005, "L2", 4.660351e-7, kOurs}, {0.005, "Linf", 5.340646e-7, kOurs},
    {0.005, "order_L2", 2.163, kOurs}, {0.005, "order_Linf", 2.159, kOurs},
}};

// example 2 on [-3, 3], h = 0.04, dt = 1e-4, c = 0.5
constexpr std::array<BaselineRow, 24> kTable5{{
    {0.25, "L2", 5.67e-6, kOurs},    {0.25, "Linf", 9.61e-6, kOurs},
    {0.50, "L2", 8.39e-6, kOurs},    {0.50, "Linf", 1.10e-5, kOurs},
    {0.75, "L2", 1.05e-5, kOurs},    {0.75, "Linf", 1.26e-5, kOurs},
    {1.00, "L2", 1.24e-5, kOurs},    {1.00, "Linf", 1.44e-5, kOurs},
    {0.25, "L2", 1.76e-5, kDehghan}, {0.25, "Linf", 4.95e-6, kDehghan},
    {0.50, "L2", 4.31e-5, kDehghan}, {0.50, "Linf", 8.42e-6, kDehghan},
    {0.75, "L2", 8.25e-5, kDehghan}, {0.75, "Linf", 1.65e-5, kDehghan},
    {1.00, "L2", 1.27e-4, kDehghan}, {1.00, "Linf", 2.51e-5, kDehghan},
    {0.25, "L2", 3.66e-5, kMittal},  {0.25, "Linf", 4.90e-5, kMittal},
    {0.50, "L2", 9.00e-5, kMittal},  {0.50, "Linf", 7.55e-5, kMittal},
    {0.75, "L2", 1.60e-4, kMittal},  {0.75, "Linf", 1.43e-4, kMittal},
    {1.00, "L2", 2.27e-4, kMittal},  {1.00, "Linf", 2.10e-4, kMittal},
}};

// example 2 on [-3, 3] at t = 1, c = 0.5, dt = 1e-4
constexpr std::array<BaselineRow, 14> kTable6{{
    {0.04, "L2", 1.235453e-5, kOurs},  {0.04, "Linf", 1.439969e-5, kOurs},
    {0.02, "L2", 3.208207e-6, kOurs},  {0.02, "Linf", 3.820306e-6, kOurs},
    {0.02, "order_L2", 1.945, kOurs},  {0.02, "order_Linf", 1.914, kOurs},
    {0.01, "L2", 8.168641e-7, kOurs},  {0.01, "Linf", 9.834778e-7, kOurs},
    {0.01, "order_L2", 1.974, kOurs},  {0.01, "order_Linf", 1.958, kOurs},
    {0.005, "L2", 2.05831e-7, kOurs},  {0.005, "Linf", 2.493047e-7, kOurs},
    {0.005, "order_L2", 1.987, kOurs}, {0.005, "order_Linf", 1.980, kOurs},
}};

// example 3 on [-10, 10], h = 0.01, dt = 1e-3, c = 0.5
constexpr std::array<BaselineRow, 15> kTable7{{
    {1.0, "L2", 1.866e-9, kOurs},    {1.0, "Linf", 2.318e-9, kOurs},
    {10.0, "L2", 5.474e-9, kOurs},   {10.0, "Linf", 5.234e-9, kOurs},
    {20.0, "L2", 9.800e-9, kOurs},   {20.0, "Linf", 5.471e-9, kOurs},
    {1.0, "L2", 2.564e-5, kMittal},  {1.0, "Linf", 1.818e-5, kMittal},
    {10.0, "L2", 8.850e-5, kMittal}, {10.0, "Linf", 5.228e-5, kMittal},
    {20.0, "L2", 1.713e-4, kMittal}, {20.0, "Linf", 9.438e-5, kMittal},
    {1.0, "Linf", 1.276e-4, kBratsos},
    {10.0, "Linf", 1.912e-4, kBratsos},
    {20.0, "Linf", 2.519e-4, kBratsos},
}};

const std::array<BaselineTable, 6> kTables{{
    {2, "L2 and Linf, example 1 on [-1, 1], h = 0.04, dt = 1e-4", kTable2},
    {3, "Linf and RMS, example 1 on [-2, 2], h = dt = 0.01", kTable3},
    {4, "convergence, example 2 on [-3, 3], t = 1, dt = 0.01", kTable4},
    {5, "L2 and Linf, example 2 on [-3, 3], h = 0.04, dt = 1e-4, c = 0.5", kTable5},
    {6, "convergence, example 2 on [-3, 3], t = 1, dt = 1e-4, c = 0.5", kTable6},
    {7, "L2 and Linf, example 3 on [-10, 10], h = 0.01, dt = 1e-3, c = 0.5", kTable7},
}};

}  // namespace

const BaselineTable& baseline_table(int id) {
  for (const auto& table : kTables) {
    if (table.id == id) return table;
  }
  throw std::out_of_range("no baseline table " + std::to_string(id));
}

const BaselineRow* find_baseline(const BaselineTable& table, double key, std::string_view metric,
                                 std::string_view source) {
  for (const auto& row : table.rows) {
    if (std::abs(row.key - key) <= 1e-12 * std::max(1.0, std::abs(key)) &&
        row.metric == metric && row.source == source) {
      return &row;
    }
  }
  return nullptr;
}

}  // namespace mcbdqm::cli
