#include <cmath>
#include <ostream>
#include <sstream>

#include "mcbdqm/errors.hpp"
#include "mcbdqm_cli/baselines.hpp"
#include "mcbdqm_cli/commands.hpp"
#include "mcbdqm_cli/output.hpp"

namespace mcbdqm::cli {
namespace {

// Published table matching this configuration, if any.
const BaselineTable* matching_baseline(const ResolvedRun& run) {
  const bool kink_setup = run.example == 2 && run.a == -3.0 && run.b == 3.0 && run.c == 0.5 &&
                          run.t_end == 1.0;
  if (!kink_setup) return nullptr;
  if (run.dt == 1e-4) return &baseline_table(6);
  if (run.dt == 0.01) return &baseline_table(4);
  return nullptr;
}

std::string optional_sci(const std::optional<double>& value) {
  return value ? format_sci(*value) : std::string();
}

std::optional<double> published_value(const BaselineTable* table, double h, std::string_view metric) {
  if (table == nullptr) return std::nullopt;
  if (const auto* row = find_baseline(*table, h, metric)) return row->value;
  return std::nullopt;
}

nlohmann::ordered_json optional_json(const std::optional<double>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json();
}

std::string render_rows(const std::vector<ConvergenceRow>& rows, const BaselineTable* published,
                        OutputFormat format, const nlohmann::ordered_json& header) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j = header;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const ConvergenceRow& r : rows) {
      nlohmann::ordered_json item;
      item["h"] = r.h;
      item["l2"] = r.l2;
      item["order_l2"] = optional_json(r.order_l2);
      item["linf"] = r.linf;
      item["order_linf"] = optional_json(r.order_linf);
      if (published != nullptr) {
        item["published_l2"] = optional_json(published_value(published, r.h, "L2"));
        item["published_order_l2"] = optional_json(published_value(published, r.h, "order_L2"));
        item["published_linf"] = optional_json(published_value(published, r.h, "Linf"));
        item["published_order_linf"] = optional_json(published_value(published, r.h, "order_Linf"));
      }
      list.push_back(item);
    }
    j["rows"] = list;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [key, value] : header.items()) {
    os << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
       << '\n';
  }
  os << "h,l2,order_l2,linf,order_linf";
  if (published != nullptr) os << ",published_l2,published_order_l2,published_linf,published_order_linf";
  os << '\n';
  for (const ConvergenceRow& r : rows) {
    os << format_sci(r.h) << ',' << format_sci(r.l2) << ',' << optional_sci(r.order_l2) << ','
       << format_sci(r.linf) << ',' << optional_sci(r.order_linf);
    if (published != nullptr) {
      os << ',' << optional_sci(published_value(published, r.h, "L2")) << ','
         << optional_sci(published_value(published, r.h, "order_L2")) << ','
         << optional_sci(published_value(published, r.h, "Linf")) << ','
         << optional_sci(published_value(published, r.h, "order_Linf"));
    }
    os << '\n';
  }
  return os.str();
}

int emit(const std::string& text, const ConvergeConfig& config, std::ostream& out) {
  if (config.out) {
    const std::string ext = config.format == OutputFormat::Json ? ".json" : ".csv";
    write_file(*config.out / ("convergence" + ext), text);
  }
  out << text;
  return kExitOk;
}

int self_test(const ConvergeConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<double> hs = config.h_list;
  if (hs.empty()) hs = {0.04, 0.02, 0.01, 0.005};
  std::vector<ConvergenceRow> rows;
  for (double h : hs) rows.push_back({h, h * h, h * h, std::nullopt, std::nullopt});
  rows = convergence_table(std::move(rows));
  bool ok = true;
  for (const ConvergenceRow& r : rows) {
    if (!r.order_l2) continue;
    ok = ok && r.order_l2 && r.order_linf && std::abs(*r.order_l2 - 2.0) <= 1e-9 &&
         std::abs(*r.order_linf - 2.0) <= 1e-9;
  }
  nlohmann::ordered_json header;
  header["mode"] = "self-test: E(h) = h^2";
  header["expected_order"] = 2.0;
  header["verdict"] = ok ? "PASS" : "FAIL";
  emit(render_rows(rows, nullptr, config.format, header), config, out);
  if (!ok) err << "self-test orders deviate from 2 by more than 1e-9\n";
  return ok ? kExitOk : kExitVerdictFail;
}

}  // namespace

int cmd_converge(const ConvergeConfig& config, std::ostream& out, std::ostream& err) {
  ResolvedRun run;
  try {
    if (config.out) ensure_directory(*config.out);
    if (config.self_test) {
      if (config.h_list.size() == 1) throw ArgumentError("need at least two spacings");
      for (double h : config.h_list) {
        if (!(h > 0.0) || !std::isfinite(h)) throw ArgumentError("spacings must be positive");
      }
      return self_test(config, out, err);
    }
    if (config.h_list.size() < 2) {
      throw ArgumentError("need at least two spacings to form an order (got " +
                          std::to_string(config.h_list.size()) + ")");
    }
    RunConfig base;
    base.example = config.example;
    base.domain = config.domain;
    base.dt = config.dt;
    base.t_end = config.t_end;
    base.c = config.c;
    base.w2_method = config.w2_method;
    base.staging = config.staging;
    for (double h : config.h_list) {
      base.h = h;
      run = resolve(base);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }

  ConvergenceOptions options;
  options.dt = run.dt;
  options.t_end = run.t_end;
  options.w2_method = run.w2_method;
  options.staging = run.staging;
  std::vector<ConvergenceRow> rows;
  try {
    rows = convergence_study(run.problem(), config.h_list, options);
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << '\n';
    return kExitDivergence;
  }

  nlohmann::ordered_json header = to_json(run);
  header.erase("h");
  header.erase("n");
  header.erase("snapshot_times");
  header.erase("rms_mode");
  const BaselineTable* published = matching_baseline(run);
  if (published != nullptr) header["reference_table"] = published->id;
  return emit(render_rows(rows, published, config.format, header), config, out);
}

}  // namespace mcbdqm::cli
