#include "commands.hpp"

#include <oscroll/errors.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using namespace oscroll::cli;
  RunConfig cfg;
  if (const char* env = std::getenv("OSCROLL_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: OSCROLL_SEED must be a non-negative integer\n";
      return 1;
    }
  }

  CLI::App app{"Exact osculating spaces and flexes of rational curves and decomposable scrolls"};
  app.set_version_flag("--version", std::string(OSCROLL_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"tsv", Format::tsv}};
  app.add_option("--format", cfg.format, "Output format: table, json or tsv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--seed", cfg.seed, "Random seed (default: $OSCROLL_SEED or 1)");

  Action action;
  add_curve_commands(app, cfg, action);
  add_scroll_commands(app, cfg, action);
  add_examples_commands(app, cfg, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Report report = action();
    std::cout << render(report, cfg.format);
    return report.any_failed() ? 2 : 0;
  } catch (const oscroll::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const oscroll::MathError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 2;
  }
}
