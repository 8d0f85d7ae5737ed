#pragma once

#include "report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace oscroll::cli {

struct RunConfig {
  std::string input_path;
  std::uint64_t seed = 1;
  std::size_t sample_budget = 20;
  Format format = Format::table;
};

// Subcommand setup stores the selected action here; main runs it once
// parsing succeeds.
using Action = std::function<Report()>;

void add_curve_commands(CLI::App& app, RunConfig& cfg, Action& action);
void add_scroll_commands(CLI::App& app, RunConfig& cfg, Action& action);
void add_examples_commands(CLI::App& app, RunConfig& cfg, Action& action);

}  // namespace oscroll::cli
