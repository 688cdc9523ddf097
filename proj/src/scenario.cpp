#include "twrc/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twrc/outer.hpp"

namespace twrc::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& key, const std::string& msg) {
  std::ostringstream os;
  os << source << ":" << line << ": ";
  if (!key.empty()) os << "field '" << key << "': ";
  os << msg;
  throw ScenarioError(os.str());
}

double parse_double(const std::string& v, const std::string& source, int line, const std::string& key) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) fail(source, line, key, "expected a number, got '" + v + "'");
  if (!std::isfinite(out)) fail(source, line, key, "value must be finite");
  return out;
}

int parse_int(const std::string& v, const std::string& source, int line, const std::string& key) {
  int out = 0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) fail(source, line, key, "expected an integer, got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& v, const std::string& source, int line, const std::string& key) {
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(source, line, key, "expected true or false, got '" + v + "'");
}

std::vector<Protocol> parse_protocols(const std::string& v, const std::string& source, int line) {
  std::vector<Protocol> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item == "all") {
      for (Protocol p : all_protocols()) out.push_back(p);
      continue;
    }
    auto p = parse_protocol(item);
    if (!p) fail(source, line, "protocols", "unknown protocol '" + item + "'");
    out.push_back(*p);
  }
  return out;
}

double ray_k(double theta_deg) {
  if (theta_deg == 45.0) return 1.0;
  if (theta_deg <= 0.0) return 0.0;
  if (theta_deg >= 90.0) return std::numeric_limits<double>::infinity();
  return std::tan(theta_deg * std::numbers::pi / 180.0);
}

// Doubles in the summary are rounded to the same 12 digits as the CSVs.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(fmt_num(v));
}

}  // namespace

ChannelGains Scenario::gains() const {
  return validate_gains(db_to_linear(gamma1_db), db_to_linear(gamma2_db), db_to_linear(gamma3_db), auto_swap);
}

std::vector<Protocol> Scenario::effective_protocols() const {
  std::vector<Protocol> out{Protocol::outer};
  for (Protocol p : protocols) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::vector<Protocol> all_protocols() {
  std::vector<Protocol> out;
  for (Protocol p : kAllProtocols) {
    if (p != Protocol::outer_analytic) out.push_back(p);
  }
  return out;
}

std::vector<std::string> preset_names() { return {"case-a", "case-b", "case-c", "low-snr"}; }

std::optional<Scenario> preset(const std::string& name) {
  static const std::map<std::string, std::array<double, 3>> table{
      {"case-a", {10, 15, 3}}, {"case-b", {20, 20, 8}}, {"case-c", {30, 35, 13}}, {"low-snr", {0, 5, -7}}};
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  Scenario s;
  s.name = name;
  s.gamma1_db = it->second[0];
  s.gamma2_db = it->second[1];
  s.gamma3_db = it->second[2];
  s.protocols = all_protocols();
  return s;
}

Scenario parse_scenario(const std::string& text, const std::string& source, bool default_auto_swap) {
  Scenario s;
  s.auto_swap = default_auto_swap;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string body = trim(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(source, line, "", "expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) fail(source, line, "", "missing key");
    if (!seen.insert(key).second) fail(source, line, key, "duplicate key");

    if (key == "name") {
      if (value.empty()) fail(source, line, key, "must not be empty");
      s.name = value;
    } else if (key == "gamma1_db") {
      s.gamma1_db = parse_double(value, source, line, key);
    } else if (key == "gamma2_db") {
      s.gamma2_db = parse_double(value, source, line, key);
    } else if (key == "gamma3_db") {
      s.gamma3_db = parse_double(value, source, line, key);
    } else if (key == "theta_points") {
      s.theta_points = parse_int(value, source, line, key);
      if (s.theta_points < 3) fail(source, line, key, "must be >= 3");
    } else if (key == "alpha_grid") {
      s.alpha_grid = parse_int(value, source, line, key);
      if (s.alpha_grid < 2) fail(source, line, key, "must be >= 2");
    } else if (key == "protocols") {
      s.protocols = parse_protocols(value, source, line);
    } else if (key == "auto_swap") {
      s.auto_swap = parse_bool(value, source, line, key);
      s.auto_swap_set = true;
    } else if (key == "outputs") {
      s.outputs = value;
    } else {
      fail(source, line, key, "unknown key");
    }
  }
  for (const char* required : {"gamma1_db", "gamma2_db", "gamma3_db"}) {
    if (!seen.count(required)) fail(source, line, required, "missing required key");
  }
  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path, bool default_auto_swap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string(), default_auto_swap);
}

void validate(const Scenario& s) {
  for (double v : {s.gamma1_db, s.gamma2_db, s.gamma3_db}) {
    if (!std::isfinite(v)) throw ValidationError("gains in dB must be finite");
  }
  if (s.theta_points < 3) throw ValidationError("theta_points must be >= 3");
  if (s.alpha_grid < 2) throw ValidationError("alpha_grid must be >= 2");
  (void)s.gains();
}

std::string fmt_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string region_csv(const region::Region& r, bool with_shares) {
  std::string out = "theta_deg,k,ra,rb,lambda1,lambda2,lambda3,lambda4,lambda5,lambda6,active_state_count\n";
  for (const region::Sample& s : r.samples()) {
    out += fmt_num(s.theta_deg) + "," + fmt_num(ray_k(s.theta_deg)) + "," + fmt_num(s.point.ra) + "," +
           fmt_num(s.point.rb);
    for (double l : s.point.shares.lambda) out += "," + (with_shares ? fmt_num(l) : std::string());
    out += ",";
    if (with_shares) out += std::to_string(s.point.shares.active_states().size());
    out += "\n";
  }
  return out;
}

std::string summary_json(const Scenario& s, const CompareResult& result) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  nlohmann::ordered_json sc;
  sc["name"] = s.name;
  sc["gamma1_db"] = s.gamma1_db;
  sc["gamma2_db"] = s.gamma2_db;
  sc["gamma3_db"] = s.gamma3_db;
  sc["theta_points"] = s.theta_points;
  sc["alpha_grid"] = s.alpha_grid;
  sc["auto_swap"] = s.auto_swap;
  sc["swapped"] = s.gains().swapped;
  auto names = nlohmann::ordered_json::array();
  for (const ProtocolRun& run : result.runs) names.push_back(std::string(to_string(run.protocol)));
  sc["protocols"] = names;
  j["scenario"] = sc;

  const region::Region& outer = result.runs.front().region;
  nlohmann::ordered_json per;
  for (const ProtocolRun& run : result.runs) {
    const region::RadialGap gap = region::max_radial_gap(outer, run.region);
    nlohmann::ordered_json e;
    e["symmetric_rate"] = round12(region::symmetric_rate(run.region));
    e["sum_rate_max"] = round12(region::sum_rate_max(run.region));
    e["max_gap_vs_outer"] = round12(gap.gap);
    e["max_gap_theta_deg"] = round12(gap.theta_deg);
    per[std::string(to_string(run.protocol))] = e;
  }
  j["protocols"] = per;
  return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

CompareResult run_compare(const Scenario& s, const std::filesystem::path& out_dir) {
  validate(s);
  const ChannelGains gains = s.gains();
  const achievable::DfOptions df{.alpha_grid = s.alpha_grid};

  CompareResult result;
  for (Protocol p : s.effective_protocols()) {
    region::Region r = region::sweep_region(evaluator_for(p, df), gains, s.theta_points, std::string(to_string(p)));
    if (gains.swapped) r = region::mirrored(r);
    result.runs.push_back({p, std::move(r)});
  }

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    for (const ProtocolRun& run : result.runs) {
      auto path = out_dir / (std::string(to_string(run.protocol)) + ".csv");
      write_file(path, region_csv(run.region, run.protocol != Protocol::outer_analytic));
      result.files.push_back(path);
    }
    auto path = out_dir / "summary.json";
    write_file(path, summary_json(s, result));
    result.files.push_back(path);
  }
  return result;
}

std::vector<ThresholdRow> run_thresholds(double lo_db, double hi_db, double step_db,
                                         const std::vector<double>& c_values) {
  if (!std::isfinite(lo_db) || !std::isfinite(hi_db) || !std::isfinite(step_db)) {
    throw ParameterError("threshold range must be finite");
  }
  if (lo_db > hi_db) throw ParameterError("threshold range: lo > hi");
  if (step_db <= 0.0) throw ParameterError("threshold range: step must be > 0");
  if (c_values.empty()) throw ParameterError("at least one c value is required");
  for (double c : c_values) {
    if (!(c > 0.0 && c <= 1.0)) throw ParameterError("c must lie in (0, 1]");
  }
  const long n = static_cast<long>(std::floor((hi_db - lo_db) / step_db + 1e-9));
  std::vector<ThresholdRow> rows;
  for (double c : c_values) {
    for (long i = 0; i <= n; ++i) {
      const double g2_db = lo_db + static_cast<double>(i) * step_db;
      const double g2 = db_to_linear(g2_db);
      const ChannelGains g{c * g2, g2, 0.0};
      rows.push_back({c, g2_db, linear_to_db(outer::capacity_thresholds(g).operative())});
    }
  }
  return rows;
}

std::string thresholds_csv(const std::vector<ThresholdRow>& rows) {
  std::string out = "c,gamma2_db,threshold_db\n";
  for (const ThresholdRow& r : rows) out += fmt_num(r.c) + "," + fmt_num(r.gamma2_db) + "," + fmt_num(r.threshold_db) + "\n";
  return out;
}

}  // namespace twrc::cli
