#include "commands.hpp"

#include <oscroll/constructions.hpp>
#include <oscroll/errors.hpp>

#include <map>
#include <memory>

namespace oscroll::cli {

namespace {

struct ExampleArgs {
  std::string id;
  std::map<std::string, long> values;
};

void run_one(Report& r, const std::string& id, const constructions::ScenarioParams& p) {
  const auto sc = constructions::scenario(id, p);
  std::string params;
  for (const auto& [k, v] : sc.parameters) params += (params.empty() ? "" : " ") + k + "=" + v;
  r.add(id, "parameters", params, "input");
  for (const auto& e : sc.expectations) {
    const auto o = e.check();
    r.add(id, e.operation + " (" + e.arguments + ")", o.actual,
          constructions::to_string(e.provenance) + ", expected " + e.expected, o.pass ? Status::pass : Status::fail);
  }
}

Report run(const RunConfig& cfg, const ExampleArgs& a) {
  constructions::ScenarioParams p;
  p.seed = cfg.seed;
  p.values = a.values;
  Report r;
  r.command = "examples run " + a.id;
  for (const auto& [k, v] : a.values) r.command += " --" + k + " " + std::to_string(v);
  r.input_digest = sha256_hex(r.command);
  r.seed = cfg.seed;
  run_one(r, a.id, p);
  return r;
}

Report all(const RunConfig& cfg) {
  Report r;
  r.command = "examples all";
  r.input_digest = sha256_hex(r.command);
  r.seed = cfg.seed;
  constructions::ScenarioParams p;
  p.seed = cfg.seed;
  for (const auto& id : constructions::scenario_ids()) {
    try {
      run_one(r, id, p);
    } catch (const MathError& e) {
      r.add(id, "construction", e.what(), "scenario setup", Status::fail);
    }
  }
  return r;
}

}  // namespace

void add_examples_commands(CLI::App& app, RunConfig& cfg, Action& action) {
  auto* ex = app.add_subcommand("examples", "Run the worked-example scenarios");
  ex->require_subcommand(1);
  auto args = std::make_shared<ExampleArgs>();

  auto* run_cmd = ex->add_subcommand("run", "Run one scenario");
  run_cmd->add_option("id", args->id, "Scenario id")
      ->required()
      ->check(CLI::IsMember(constructions::scenario_ids()));
  for (const char* key : {"r1", "r2", "k", "r", "m", "d"})
    run_cmd->add_option_function<long>(std::string("--") + key, [args, key](long v) { args->values[key] = v; },
                                       "Scenario parameter");
  run_cmd->callback([&, args] { action = [&cfg, args] { return run(cfg, *args); }; });

  auto* all_cmd = ex->add_subcommand("all", "Run every scenario with default parameters");
  all_cmd->callback([&] { action = [&cfg] { return all(cfg); }; });

  auto* list = ex->add_subcommand("list", "List scenario ids");
  list->callback([&] {
    action = [&cfg] {
      Report r;
      r.command = "examples list";
      r.input_digest = sha256_hex(r.command);
      r.seed = cfg.seed;
      for (const auto& id : constructions::scenario_ids()) r.add(id, "scenario", id, "available");
      return r;
    };
  });
}

}  // namespace oscroll::cli
