#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "mcbdqm/errors.hpp"
#include "mcbdqm_cli/commands.hpp"

namespace mcbdqm::cli {
namespace {

struct SharedFlags {
  std::vector<double> domain;
  std::string w2_method;
  std::string rms_mode;
  std::string staging;
  std::string format;
  std::string out;
};

CLI::Option* add_domain(CLI::App* app, SharedFlags& f) {
  return app->add_option("--domain", f.domain, "Interval end points A B")->expected(2);
}

CLI::Option* add_w2(CLI::App* app, SharedFlags& f, bool allow_both = false) {
  return app
      ->add_option("--w2-method", f.w2_method,
                   allow_both ? "Second-derivative weights: shu, spline or both"
                              : "Second-derivative weights: shu or spline")
      ->check(allow_both ? CLI::IsMember({"shu", "spline", "both"})
                         : CLI::IsMember({"shu", "spline"}));
}

CLI::Option* add_rms(CLI::App* app, SharedFlags& f) {
  return app->add_option("--rms-mode", f.rms_mode, "RMS convention")
      ->check(CLI::IsMember({"conventional", "literal"}));
}

CLI::Option* add_staging(CLI::App* app, SharedFlags& f) {
  return app
      ->add_option("--bc-staging", f.staging,
                   "Re-impose boundary values after each stage or each step")
      ->check(CLI::IsMember({"stage", "step"}));
}

CLI::Option* add_format(CLI::App* app, SharedFlags& f) {
  return app->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

CLI::Option* add_out(CLI::App* app, SharedFlags& f) {
  return app->add_option("--out", f.out, "Output directory");
}

bool given(const CLI::Option* opt) { return opt->count() > 0; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sine-Gordon solver: modified cubic B-spline differential quadrature in space, "
               "SSP-RK54 in time"};
  app.name("mcbdqm");
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run one simulation and report errors");
  SharedFlags sf;
  std::string config_path;
  int example = 1;
  double h = 0.0, dt = 0.0, t_end = 0.0, c = 0.0;
  std::vector<double> snapshots;
  std::size_t surface = 0;
  auto* s_config = solve_cmd->add_option("--config", config_path, "JSON file with RunConfig fields")
                       ->check(CLI::ExistingFile);
  auto* s_example = solve_cmd->add_option("--example", example, "Example id")
                        ->check(CLI::IsMember({1, 2, 3}));
  auto* s_domain = add_domain(solve_cmd, sf);
  auto* s_h = solve_cmd->add_option("--h", h, "Grid spacing");
  auto* s_dt = solve_cmd->add_option("--dt", dt, "Time step");
  auto* s_tend = solve_cmd->add_option("--t-end", t_end, "Final time");
  auto* s_c = solve_cmd->add_option("--c", c, "Wave-speed parameter (examples 2, 3)");
  auto* s_w2 = add_w2(solve_cmd, sf);
  auto* s_rms = add_rms(solve_cmd, sf);
  auto* s_stage = add_staging(solve_cmd, sf);
  auto* s_snap = solve_cmd->add_option("--snapshot", snapshots, "Output times t1,t2,...")
                     ->delimiter(',');
  auto* s_out = add_out(solve_cmd, sf);
  auto* s_format = add_format(solve_cmd, sf);
  auto* s_surface = solve_cmd->add_option(
      "--surface", surface, "Write an (x, t, u) surface with this many time intervals");
  bool gnuplot = false;
  auto* s_gnuplot = solve_cmd->add_flag("--gnuplot", gnuplot, "Also write plot.gp");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Reproduce a published error table");
  SharedFlags bf;
  int table = 0;
  bench_cmd->add_option("--table", table, "Table id")->required()->check(
      CLI::IsMember({2, 3, 5, 7}));
  add_w2(bench_cmd, bf);
  add_rms(bench_cmd, bf);
  add_staging(bench_cmd, bf);
  add_out(bench_cmd, bf);
  add_format(bench_cmd, bf);

  // converge
  auto* conv_cmd = app.add_subcommand("converge", "Grid refinement study");
  SharedFlags cf;
  ConvergeConfig conv;
  double c_dt = 0.0, c_tend = 0.0, c_c = 0.0;
  conv_cmd->add_option("--example", conv.example, "Example id")->check(CLI::IsMember({1, 2, 3}));
  auto* c_domain = add_domain(conv_cmd, cf);
  conv_cmd->add_option("--h", conv.h_list, "Spacings h1,h2,... (coarse to fine)")
      ->delimiter(',');
  auto* c_dt_opt = conv_cmd->add_option("--dt", c_dt, "Time step");
  auto* c_tend_opt = conv_cmd->add_option("--t-end", c_tend, "Final time");
  auto* c_c_opt = conv_cmd->add_option("--c", c_c, "Wave-speed parameter");
  auto* c_w2 = add_w2(conv_cmd, cf);
  auto* c_stage = add_staging(conv_cmd, cf);
  auto* c_out = add_out(conv_cmd, cf);
  auto* c_format = add_format(conv_cmd, cf);
  conv_cmd->add_flag("--self-test", conv.self_test, "Check the order estimator on E(h) = h^2");

  // weights
  auto* w_cmd = app.add_subcommand("weights", "Dump the weighting coefficient matrices");
  SharedFlags wf;
  WeightsConfig wcfg;
  std::size_t w_n = 0;
  double w_h = 0.0;
  auto* w_domain = add_domain(w_cmd, wf);
  auto* w_n_opt = w_cmd->add_option("--n", w_n, "Number of nodes");
  auto* w_h_opt = w_cmd->add_option("--h", w_h, "Grid spacing");
  auto* w_w2 = add_w2(w_cmd, wf, true);
  auto* w_out = add_out(w_cmd, wf);
  auto* w_format = add_format(w_cmd, wf);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }

  try {
    if (solve_cmd->parsed()) {
      RunConfig cfg;
      if (given(s_config)) apply_json_file(cfg, config_path);
      if (given(s_example)) cfg.example = example;
      if (given(s_domain)) cfg.domain = std::make_pair(sf.domain[0], sf.domain[1]);
      if (given(s_h)) cfg.h = h;
      if (given(s_dt)) cfg.dt = dt;
      if (given(s_tend)) cfg.t_end = t_end;
      if (given(s_c)) cfg.c = c;
      if (given(s_w2)) cfg.w2_method = parse_second_derivative_method(sf.w2_method);
      if (given(s_rms)) cfg.rms_mode = parse_rms_mode(sf.rms_mode);
      if (given(s_stage)) cfg.staging = parse_boundary_staging(sf.staging);
      if (given(s_snap)) cfg.snapshot_times = snapshots;
      if (given(s_out)) cfg.out = sf.out;
      if (given(s_format)) cfg.format = parse_output_format(sf.format);
      if (given(s_surface)) cfg.surface_levels = surface;
      if (given(s_gnuplot)) cfg.gnuplot = gnuplot;
      return cmd_solve(cfg, out, err);
    }
    if (bench_cmd->parsed()) {
      BenchOptions options;
      if (!bf.w2_method.empty()) options.w2_method = parse_second_derivative_method(bf.w2_method);
      if (!bf.rms_mode.empty()) options.rms_mode = parse_rms_mode(bf.rms_mode);
      if (!bf.staging.empty()) options.staging = parse_boundary_staging(bf.staging);
      if (!bf.out.empty()) options.out = bf.out;
      if (!bf.format.empty()) options.format = parse_output_format(bf.format);
      return cmd_bench(table, options, out, err);
    }
    if (conv_cmd->parsed()) {
      if (given(c_domain)) conv.domain = std::make_pair(cf.domain[0], cf.domain[1]);
      if (given(c_dt_opt)) conv.dt = c_dt;
      if (given(c_tend_opt)) conv.t_end = c_tend;
      if (given(c_c_opt)) conv.c = c_c;
      if (given(c_w2)) conv.w2_method = parse_second_derivative_method(cf.w2_method);
      if (given(c_stage)) conv.staging = parse_boundary_staging(cf.staging);
      if (given(c_out)) conv.out = cf.out;
      if (given(c_format)) conv.format = parse_output_format(cf.format);
      return cmd_converge(conv, out, err);
    }
    if (given(w_domain)) {
      wcfg.a = wf.domain[0];
      wcfg.b = wf.domain[1];
    }
    if (given(w_n_opt)) wcfg.n = w_n;
    if (given(w_h_opt)) wcfg.h = w_h;
    if (given(w_w2)) {
      wcfg.methods.clear();
      if (wf.w2_method == "both") {
        wcfg.methods = {SecondDerivativeMethod::ShuRecurrence,
                        SecondDerivativeMethod::SplineSystem};
      } else {
        wcfg.methods.push_back(parse_second_derivative_method(wf.w2_method));
      }
    }
    if (given(w_out)) wcfg.out = wf.out;
    if (given(w_format)) wcfg.format = parse_output_format(wf.format);
    return cmd_weights(wcfg, out, err);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const DivergenceError& e) {
    err << "diverged: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const SingularMatrixError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitDivergence;
  }
}

}  // namespace mcbdqm::cli
