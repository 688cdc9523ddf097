#pragma once

// Scenario files, figure presets and the file-emitting runs behind the CLI.
//
// Scenario files are flat `key = value` text, one pair per line, `#` starts
// a comment:
//
//   name         = case-a
//   gamma1_db    = 10
//   gamma2_db    = 15
//   gamma3_db    = 3
//   theta_points = 181          # optional, default 181
//   alpha_grid   = 33           # optional, default 33
//   protocols    = outer, hbc   # optional; "all" or empty
//   auto_swap    = true         # optional, default false
//   outputs      = out/case-a   # optional output directory

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "twrc/protocols.hpp"
#include "twrc/region.hpp"

namespace twrc::cli {

/// Output file could not be created or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario text; the message carries source, line and field.
class ScenarioError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct Scenario {
  std::string name = "scenario";
  double gamma1_db = 0.0;
  double gamma2_db = 0.0;
  double gamma3_db = 0.0;
  int theta_points = region::kDefaultThetaPoints;
  int alpha_grid = 33;
  std::vector<Protocol> protocols;  // empty: outer bound only
  bool auto_swap = false;
  bool auto_swap_set = false;  // auto_swap given explicitly in the file
  std::string outputs;

  /// Linear gains after ordering checks (and the swap, if enabled).
  [[nodiscard]] ChannelGains gains() const;
  /// Protocols to run: outer first, then the requested ones without repeats.
  [[nodiscard]] std::vector<Protocol> effective_protocols() const;
};

/// Protocols selected by "all": every protocol except the analytic outer bound.
std::vector<Protocol> all_protocols();

std::vector<std::string> preset_names();
/// case-a, case-b, case-c, low-snr; all protocols selected.
std::optional<Scenario> preset(const std::string& name);

/// `default_auto_swap` applies when the text has no auto_swap key.
Scenario parse_scenario(const std::string& text, const std::string& source = "<string>",
                        bool default_auto_swap = false);
/// Reads and parses a scenario file; IoError if it cannot be read.
Scenario load_scenario(const std::filesystem::path& path, bool default_auto_swap = false);

/// Checks ranges and gain ordering; throws ValidationError or ParameterError.
void validate(const Scenario& s);

struct ProtocolRun {
  Protocol protocol;
  region::Region region;  // in the caller's a/b orientation
};

struct CompareResult {
  std::vector<ProtocolRun> runs;  // runs[0] is the numerical outer bound
  std::vector<std::filesystem::path> files;
};

/// Sweeps every effective protocol and, when `out_dir` is non-empty, writes
/// one CSV per protocol plus summary.json.
CompareResult run_compare(const Scenario& s, const std::filesystem::path& out_dir);

/// CSV for one region: theta_deg,k,ra,rb,lambda1..lambda6,active_state_count.
std::string region_csv(const region::Region& r, bool with_shares);
/// JSON summary of a compare run.
std::string summary_json(const Scenario& s, const CompareResult& result);

struct ThresholdRow {
  double c = 0.0;
  double gamma2_db = 0.0;
  double threshold_db = 0.0;
};

/// Operative direct-link threshold for gamma1 = c * gamma2 over the gamma2
/// range lo:step:hi (dB). ParameterError for lo > hi, step <= 0 or c outside
/// (0, 1].
std::vector<ThresholdRow> run_thresholds(double lo_db, double hi_db, double step_db,
                                         const std::vector<double>& c_values);
std::string thresholds_csv(const std::vector<ThresholdRow>& rows);

/// %.12g with "inf"/"-inf"/"nan" spelled out.
std::string fmt_num(double v);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace twrc::cli
