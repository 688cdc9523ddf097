// twrc: rate regions and outer bounds for the half-duplex two-way relay channel.
//
//   twrc compare    --preset case-a --out out/case-a
//   twrc outer      --scenario my.txt --out out/my
//   twrc sweep      --preset low-snr --protocol six-state
//   twrc thresholds --lo 0 --hi 40 --step 1 --c 1,0.5,0.1
//
// Exit codes: 0 ok, 2 invalid input, 3 solver failure, 4 I/O failure.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "twrc/scenario.hpp"

namespace {

using namespace twrc;
using namespace twrc::cli;

struct Common {
  std::string scenario_path;
  std::string preset_name;
  int theta_points = 0;
  int alpha_grid = 0;
  bool auto_swap = true;
  CLI::Option* auto_swap_flag = nullptr;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--scenario", c.scenario_path, "Scenario file (key = value)");
  cmd->add_option("--preset", c.preset_name, "Preset: case-a, case-b, case-c, low-snr");
  cmd->add_option("--theta-points", c.theta_points, "Rays between the axes (>= 3)");
  cmd->add_option("--alpha-grid", c.alpha_grid, "Power-split grid per axis for six-state-df");
  c.auto_swap_flag = cmd->add_flag("--auto-swap,!--no-auto-swap", c.auto_swap, "Exchange a and b when gamma1 > gamma2 (default on)");
  cmd->add_option("--out", c.out, "Output directory");
}

Scenario resolve(const Common& c) {
  if (!c.scenario_path.empty() && !c.preset_name.empty()) {
    throw ValidationError("--scenario and --preset are mutually exclusive");
  }
  Scenario s;
  if (!c.scenario_path.empty()) {
    s = load_scenario(c.scenario_path, c.auto_swap);
  } else if (!c.preset_name.empty()) {
    auto p = preset(c.preset_name);
    if (!p) throw ValidationError("unknown preset '" + c.preset_name + "'");
    s = *p;
  } else {
    throw ValidationError("one of --scenario or --preset is required");
  }
  if (c.theta_points != 0) s.theta_points = c.theta_points;
  if (c.alpha_grid != 0) s.alpha_grid = c.alpha_grid;
  if (c.auto_swap_flag->count() > 0 || !s.auto_swap_set) s.auto_swap = c.auto_swap;
  if (!c.out.empty()) s.outputs = c.out;
  validate(s);
  return s;
}

void report(const CompareResult& r) {
  for (const auto& f : r.files) std::cout << f.string() << "\n";
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError("bad number '" + item + "' in --c");
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Rate regions and outer bounds for the half-duplex two-way relay channel"};
  app.require_subcommand(1);

  Common compare_opts;
  std::vector<std::string> protocol_names;
  auto* compare = app.add_subcommand("compare", "Sweep the outer bound and protocols; write CSVs and summary.json");
  add_common(compare, compare_opts);
  compare->add_option("--protocols", protocol_names, "Override the protocol list (comma separated)")->delimiter(',');

  Common outer_opts;
  auto* outer_cmd = app.add_subcommand("outer", "Numerical and closed-form outer bounds");
  add_common(outer_cmd, outer_opts);

  Common sweep_opts;
  std::string sweep_protocol = "outer";
  auto* sweep = app.add_subcommand("sweep", "One protocol; CSV to --out/<protocol>.csv or stdout");
  add_common(sweep, sweep_opts);
  sweep->add_option("--protocol", sweep_protocol, "Protocol identifier");

  double lo = 0.0, hi = 40.0, step = 1.0;
  std::string c_text = "1,0.5,0.1";
  std::string thr_out;
  auto* thr = app.add_subcommand("thresholds", "Direct-link thresholds versus gamma2 for gamma1 = c gamma2");
  thr->add_option("--lo", lo, "First gamma2 in dB");
  thr->add_option("--hi", hi, "Last gamma2 in dB");
  thr->add_option("--step", step, "gamma2 step in dB");
  thr->add_option("--c", c_text, "Comma separated ratios in (0, 1]");
  thr->add_option("--out", thr_out, "Output directory (thresholds.csv); stdout if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (compare->parsed()) {
    Scenario s = resolve(compare_opts);
    if (!protocol_names.empty()) {
      s.protocols.clear();
      for (const auto& n : protocol_names) {
        if (n == "all") {
          s.protocols = all_protocols();
          continue;
        }
        auto p = parse_protocol(n);
        if (!p) throw ValidationError("unknown protocol '" + n + "'");
        s.protocols.push_back(*p);
      }
    }
    if (s.outputs.empty()) s.outputs = "out/" + s.name;
    report(run_compare(s, s.outputs));
  } else if (outer_cmd->parsed()) {
    Scenario s = resolve(outer_opts);
    s.protocols = {Protocol::outer_analytic};
    if (s.outputs.empty()) s.outputs = "out/" + s.name;
    report(run_compare(s, s.outputs));
  } else if (sweep->parsed()) {
    Scenario s = resolve(sweep_opts);
    auto p = parse_protocol(sweep_protocol);
    if (!p) throw ValidationError("unknown protocol '" + sweep_protocol + "'");
    s.protocols = {*p};
    const std::string outputs = s.outputs;
    s.outputs.clear();
    CompareResult r = run_compare(s, {});
    const ProtocolRun& run = r.runs.back();
    const std::string csv = region_csv(run.region, *p != Protocol::outer_analytic);
    if (outputs.empty()) {
      std::cout << csv;
    } else {
      std::error_code ec;
      std::filesystem::create_directories(outputs, ec);
      if (ec) throw IoError("cannot create output directory " + outputs + ": " + ec.message());
      const auto path = std::filesystem::path(outputs) / (sweep_protocol + ".csv");
      write_file(path, csv);
      std::cout << path.string() << "\n";
    }
  } else if (thr->parsed()) {
    const std::string csv = thresholds_csv(run_thresholds(lo, hi, step, parse_list(c_text)));
    if (thr_out.empty()) {
      std::cout << csv;
    } else {
      std::error_code ec;
      std::filesystem::create_directories(thr_out, ec);
      if (ec) throw IoError("cannot create output directory " + thr_out + ": " + ec.message());
      const auto path = std::filesystem::path(thr_out) / "thresholds.csv";
      write_file(path, csv);
      std::cout << path.string() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
