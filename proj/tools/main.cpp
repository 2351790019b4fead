#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

struct FlagValues {
  std::string config;
  std::string channel;
  std::string temperature;
  std::string grid;
  std::string format;
  std::string out;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

struct FlagOptions {
  CLI::Option* config = nullptr;
  CLI::Option* channel = nullptr;
  CLI::Option* temperature = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* c1 = nullptr;
  CLI::Option* c2 = nullptr;
  CLI::Option* c3 = nullptr;
};

FlagOptions add_flags(CLI::App* cmd, FlagValues& values) {
  FlagOptions opts;
  opts.config = cmd->add_option("--config", values.config,
                                "Config file with key = value lines");
  opts.channel = cmd->add_option("--channel", values.channel,
                                 "Decoherence channel: phase|bit|phase-bit");
  opts.c1 = cmd->add_option("--c1", values.c1, "Initial coefficient c1");
  opts.c2 = cmd->add_option("--c2", values.c2, "Initial coefficient c2");
  opts.c3 = cmd->add_option("--c3", values.c3, "Initial coefficient c3");
  opts.temperature = cmd->add_option(
      "--temperature", values.temperature,
      "Unruh temperature: float, inf, or 1/(2 ln cot(pi/K))");
  opts.grid = cmd->add_option("--grid", values.grid,
                              "Time grid START:STOP:COUNT in lambda*t");
  opts.format =
      cmd->add_option("--format", values.format, "Output format: csv|json");
  opts.out = cmd->add_option("--out", values.out,
                             "Output path (stdout when omitted)");
  return opts;
}

// config file first, then flag overrides
unruhdec::cli::RunSpec build_spec(const FlagValues& values,
                                  const FlagOptions& opts) {
  unruhdec::cli::RunSpec spec;
  if (opts.config->count() > 0) {
    spec = unruhdec::cli::load_config(values.config);
  }
  if (opts.channel->count() > 0) {
    spec.channel = unruhdec::parse_channel(values.channel);
  }
  if (opts.c1->count() > 0) {
    spec.params.c1 = values.c1;
  }
  if (opts.c2->count() > 0) {
    spec.params.c2 = values.c2;
  }
  if (opts.c3->count() > 0) {
    spec.params.c3 = values.c3;
  }
  if (opts.temperature->count() > 0) {
    spec.temperature = values.temperature;
  }
  if (opts.grid->count() > 0) {
    spec.grid = unruhdec::cli::parse_grid(values.grid);
  }
  if (opts.format->count() > 0) {
    spec.format = unruhdec::cli::parse_format(values.format);
  }
  if (opts.out->count() > 0) {
    spec.out_path = values.out;
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Correlation dynamics of a two-qubit state shared by an inertial and a "
      "uniformly accelerated observer under flip channels"};
  app.require_subcommand(1);

  FlagValues sweep_values;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Sweep lambda*t and tabulate I, C, D and concurrence");
  const FlagOptions sweep_opts = add_flags(sweep_cmd, sweep_values);

  FlagValues transition_values;
  CLI::App* transition_cmd = app.add_subcommand(
      "transition",
      "Locate the decoherence transition and sudden-death times");
  const FlagOptions transition_opts =
      add_flags(transition_cmd, transition_values);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep_cmd->parsed()) {
      const auto spec = build_spec(sweep_values, sweep_opts);
      return unruhdec::cli::cmd_sweep(spec, std::cout, std::cerr);
    }
    const auto spec = build_spec(transition_values, transition_opts);
    return unruhdec::cli::cmd_transition(spec, std::cout, std::cerr);
  } catch (const unruhdec::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 3;
  }
}
