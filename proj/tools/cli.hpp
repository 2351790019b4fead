#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruhdec/dynamics.hpp"

namespace unruhdec::cli {

enum class OutputFormat { Csv, Json };

/// Inclusive linspace "start:stop:count" in lambda*t.
struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int count = 201;
};

/// Full description of one batch run: state, channel, time grid and output
/// target. Populated from a config file, then overridden by flags.
struct RunSpec {
  BellDiagonalParams params{1.0, -0.6, 0.6};
  double omega = 1.0;
  std::string temperature = "0";  // token, resolved by parse_temperature
  ChannelKind channel = ChannelKind::PhaseFlip;
  GridSpec grid;
  Bracket bracket;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty writes to stdout
};

/// Resolves a temperature token: "0", "inf", a float literal, or the exact
/// closed form "1/(2 ln cot(pi/K))" (whitespace optional). Throws ParseError
/// on anything else or when the closed form evaluates to a negative value.
double parse_temperature(const std::string& token);

GridSpec parse_grid(const std::string& token);     // "start:stop:count"
Bracket parse_bracket(const std::string& token);   // "lo:hi"
OutputFormat parse_format(const std::string& token);

std::vector<double> make_grid(const GridSpec& grid);

/// Flat key = value config with optional [section] headers and '#' comments.
/// Keys: c1 c2 c3 omega temperature channel grid bracket format out.
RunSpec load_config(const std::string& path);

void apply_key(RunSpec& spec, const std::string& key,
               const std::string& value);

/// One diagnostic line per violated bound; empty means the spec is runnable.
/// Grid checks apply only when require_grid is set (transition searches use
/// the bracket instead).
std::vector<std::string> validate_run_spec(const RunSpec& spec,
                                           bool require_grid);

/// 12-significant-digit formatting used for every number in emitted tables;
/// stable under a parse/format round trip.
std::string format_sig12(double value);

std::string sweep_table_csv(const std::vector<CorrelationRecord>& records);
std::string sweep_table_json(const std::vector<CorrelationRecord>& records);

/// Runs the sweep and writes the table (atomically when out_path is set).
/// Exit codes: 0 ok, 2 invalid spec, 3 numerical failure (message names the
/// failing lambda_t).
int cmd_sweep(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Runs the transition and sudden-death searches and writes a JSON report
/// {transition_time, sudden_death_time, method, residual}; absent times are
/// null. Exit codes: 0 ok, 2 invalid spec, 3 numerical failure, 4 no
/// transition in bracket.
int cmd_transition(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace unruhdec::cli
