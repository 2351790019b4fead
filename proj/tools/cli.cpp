#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace unruhdec::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string squeeze(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != ' ' && c != '\t') {
      out.push_back(c);
    }
  }
  return out;
}

double parse_double(const std::string& token, const std::string& what) {
  try {
    std::size_t consumed = 0;
    const double value = std::stod(token, &consumed);
    if (consumed != token.size()) {
      throw ParseError("trailing characters in " + what + ": '" + token + "'");
    }
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse " + what + ": '" + token + "'");
  }
}

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t consumed = 0;
    const int value = std::stoi(token, &consumed);
    if (consumed != token.size()) {
      throw ParseError("trailing characters in " + what + ": '" + token + "'");
    }
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse " + what + ": '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  // temp file + rename so readers never observe a partial table
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot open output file: " + tmp);
    }
    out << content;
    if (!out.flush()) {
      throw Error("failed writing output file: " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json report_json(const TransitionReport& report) {
  nlohmann::json j;
  if (report.transition_time) {
    j["transition_time"] = *report.transition_time;
  } else {
    j["transition_time"] = nullptr;
  }
  if (report.sudden_death_time) {
    j["sudden_death_time"] = *report.sudden_death_time;
  } else {
    j["sudden_death_time"] = nullptr;
  }
  j["method"] = report.method == DetectionMethod::ClosedForm ? "closed_form"
                                                             : "detected";
  j["residual"] = report.residual;
  return j;
}

}  // namespace

double parse_temperature(const std::string& token) {
  const std::string s = squeeze(token);
  if (s.empty()) {
    throw ParseError("empty temperature token");
  }
  if (s == "inf") {
    return std::numeric_limits<double>::infinity();
  }

  // closed form 1/(2 ln cot(pi/K))
  static const std::regex cot_form(
      R"(^1/\(2\*?ln\*?cot\(pi/([0-9]+(?:\.[0-9]*)?)\)\)$)");
  std::smatch match;
  if (std::regex_match(s, match, cot_form)) {
    const double k = parse_double(match[1].str(), "temperature denominator");
    if (k <= 2.0) {
      throw ParseError("cot(pi/" + match[1].str() +
                       ") is not positive; temperature token invalid");
    }
    const double cot = 1.0 / std::tan(std::numbers::pi / k);
    const double t = 1.0 / (2.0 * std::log(cot));
    if (std::isnan(t) || t < 0.0) {
      throw ParseError("temperature token '" + token +
                       "' evaluates to a negative value");
    }
    return t;
  }

  return parse_double(s, "temperature");
}

GridSpec parse_grid(const std::string& token) {
  const auto parts = split(squeeze(token), ':');
  if (parts.size() != 3) {
    throw ParseError("grid must be START:STOP:COUNT, got '" + token + "'");
  }
  GridSpec grid;
  grid.start = parse_double(parts[0], "grid start");
  grid.stop = parse_double(parts[1], "grid stop");
  grid.count = parse_int(parts[2], "grid count");
  return grid;
}

Bracket parse_bracket(const std::string& token) {
  const auto parts = split(squeeze(token), ':');
  if (parts.size() != 2) {
    throw ParseError("bracket must be LO:HI, got '" + token + "'");
  }
  return {parse_double(parts[0], "bracket lo"),
          parse_double(parts[1], "bracket hi")};
}

OutputFormat parse_format(const std::string& token) {
  if (token == "csv") {
    return OutputFormat::Csv;
  }
  if (token == "json") {
    return OutputFormat::Json;
  }
  throw ParseError("unknown format '" + token + "' (expected csv or json)");
}

std::vector<double> make_grid(const GridSpec& grid) {
  std::vector<double> values;
  if (grid.count < 1) {
    return values;
  }
  values.reserve(static_cast<std::size_t>(grid.count));
  if (grid.count == 1) {
    values.push_back(grid.start);
    return values;
  }
  const double step = (grid.stop - grid.start) / (grid.count - 1);
  for (int i = 0; i < grid.count; ++i) {
    values.push_back(grid.start + i * step);
  }
  values.back() = grid.stop;
  return values;
}

void apply_key(RunSpec& spec, const std::string& key,
               const std::string& value) {
  if (key == "c1") {
    spec.params.c1 = parse_double(value, "c1");
  } else if (key == "c2") {
    spec.params.c2 = parse_double(value, "c2");
  } else if (key == "c3") {
    spec.params.c3 = parse_double(value, "c3");
  } else if (key == "omega") {
    spec.omega = parse_double(value, "omega");
  } else if (key == "temperature") {
    spec.temperature = value;
  } else if (key == "channel") {
    spec.channel = parse_channel(value);
  } else if (key == "grid") {
    spec.grid = parse_grid(value);
  } else if (key == "bracket") {
    spec.bracket = parse_bracket(value);
  } else if (key == "format") {
    spec.format = parse_format(value);
  } else if (key == "out") {
    spec.out_path = value;
  } else {
    throw ParseError("unknown config key '" + key + "'");
  }
}

RunSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open config file: " + path);
  }

  RunSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      continue;  // section headers group keys but carry no content
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) +
                       " is not 'key = value': '" + line + "'");
    }
    try {
      apply_key(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return spec;
}

std::vector<std::string> validate_run_spec(const RunSpec& spec,
                                           bool require_grid) {
  std::vector<std::string> diagnostics;

  const double residual = positivity_residual(spec.params);
  if (residual > kPsdTolerance) {
    std::ostringstream msg;
    msg << "state parameters (c1,c2,c3)=(" << spec.params.c1 << ","
        << spec.params.c2 << "," << spec.params.c3
        << ") violate positivity: residual " << residual;
    diagnostics.push_back(msg.str());
  }
  for (double c : {spec.params.c1, spec.params.c2, spec.params.c3}) {
    if (std::isnan(c) || std::abs(c) > 1.0 + kPsdTolerance) {
      diagnostics.push_back("each c_i must lie in [-1, 1]");
      break;
    }
  }

  if (!(spec.omega > 0.0)) {
    diagnostics.push_back("omega must be positive");
  }

  try {
    const double t = parse_temperature(spec.temperature);
    if (std::isnan(t) || t < 0.0) {
      diagnostics.push_back("temperature must be >= 0");
    }
  } catch (const ParseError& e) {
    diagnostics.push_back(e.what());
  }

  if (require_grid) {
    if (spec.grid.count < 1) {
      diagnostics.push_back("t_grid must be non-empty");
    } else {
      if (std::isnan(spec.grid.start) || std::isnan(spec.grid.stop)) {
        diagnostics.push_back("grid bounds must be finite");
      } else if (spec.grid.start < 0.0) {
        diagnostics.push_back("grid values must be >= 0");
      } else if (spec.grid.count > 1 && spec.grid.stop <= spec.grid.start) {
        diagnostics.push_back("grid stop must exceed grid start");
      }
    }
  } else {
    if (std::isnan(spec.bracket.lo) || std::isnan(spec.bracket.hi) ||
        spec.bracket.lo < 0.0 || spec.bracket.hi <= spec.bracket.lo) {
      diagnostics.push_back("bracket must satisfy 0 <= lo < hi");
    }
  }
  return diagnostics;
}

std::string format_sig12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string sweep_table_csv(const std::vector<CorrelationRecord>& records) {
  std::string out =
      "lambda_t,mutual_info,classical,discord,concurrence,theta_opt,phi_opt\n";
  for (const CorrelationRecord& r : records) {
    out += format_sig12(r.lambda_t);
    out += ',';
    out += format_sig12(r.mutual_info);
    out += ',';
    out += format_sig12(r.classical);
    out += ',';
    out += format_sig12(r.discord);
    out += ',';
    out += format_sig12(r.concurrence);
    out += ',';
    out += format_sig12(r.optimal_angles.theta);
    out += ',';
    out += format_sig12(r.optimal_angles.phi);
    out += '\n';
  }
  return out;
}

std::string sweep_table_json(const std::vector<CorrelationRecord>& records) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const CorrelationRecord& r = records[i];
    out += "  {\"lambda_t\": " + format_sig12(r.lambda_t);
    out += ", \"mutual_info\": " + format_sig12(r.mutual_info);
    out += ", \"classical\": " + format_sig12(r.classical);
    out += ", \"discord\": " + format_sig12(r.discord);
    out += ", \"concurrence\": " + format_sig12(r.concurrence);
    out += ", \"theta_opt\": " + format_sig12(r.optimal_angles.theta);
    out += ", \"phi_opt\": " + format_sig12(r.optimal_angles.phi);
    out += i + 1 < records.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

int cmd_sweep(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const auto diagnostics = validate_run_spec(spec, /*require_grid=*/true);
  if (!diagnostics.empty()) {
    for (const std::string& d : diagnostics) {
      err << d << '\n';
    }
    return 2;
  }

  SweepConfig config;
  config.params = spec.params;
  config.unruh = UnruhParams::from_temperature(
      parse_temperature(spec.temperature), spec.omega);
  config.channel = spec.channel;
  config.t_grid = make_grid(spec.grid);

  std::vector<CorrelationRecord> records;
  try {
    records = sweep(config);
  } catch (const SweepError& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 3;
  }

  const std::string table = spec.format == OutputFormat::Csv
                                ? sweep_table_csv(records)
                                : sweep_table_json(records);
  try {
    write_output(spec.out_path, table, out);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 3;
  }
  return 0;
}

int cmd_transition(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const auto diagnostics = validate_run_spec(spec, /*require_grid=*/false);
  if (!diagnostics.empty()) {
    for (const std::string& d : diagnostics) {
      err << d << '\n';
    }
    return 2;
  }

  const UnruhParams unruh = UnruhParams::from_temperature(
      parse_temperature(spec.temperature), spec.omega);

  TransitionReport report;
  try {
    report = find_transition(spec.params, unruh, spec.channel, spec.bracket);
  } catch (const NoBracketError&) {
    err << "no transition in bracket\n";
    return 4;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 3;
  }

  try {
    const TransitionReport esd =
        find_sudden_death(spec.params, unruh, spec.channel, spec.bracket);
    report.sudden_death_time = esd.sudden_death_time;
  } catch (const NoBracketError&) {
    // no sudden death on this bracket; reported as null
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 3;
  }

  try {
    write_output(spec.out_path, report_json(report).dump(2) + "\n", out);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace unruhdec::cli
