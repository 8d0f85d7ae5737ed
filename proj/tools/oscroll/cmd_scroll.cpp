#include "commands.hpp"

#include <oscroll/discriminant.hpp>
#include <oscroll/io.hpp>
#include <oscroll/verify.hpp>

#include <memory>

namespace oscroll::cli {

using scrolls::DecomposableScroll;

namespace {

struct ScrollArgs {
  std::size_t k = 2;
  std::string point;
};

std::string subject(const DecomposableScroll& sc) {
  std::string s = "[";
  const auto labels = sc.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "]";
}

struct Loaded {
  std::string bytes;
  DecomposableScroll scroll;
};

Loaded load(const RunConfig& cfg) {
  std::string bytes = io::read_file(cfg.input_path);
  DecomposableScroll sc = io::parse_scroll(bytes);
  return {std::move(bytes), std::move(sc)};
}

Report start(const std::string& command, const RunConfig& cfg, const std::string& bytes) {
  Report r;
  r.command = command;
  r.input_digest = sha256_hex(bytes);
  r.seed = cfg.seed;
  return r;
}

Report osc(const RunConfig& cfg, const ScrollArgs& a) {
  const auto [bytes, sc] = load(cfg);
  const auto x = io::parse_scroll_point(a.point, sc.n());
  Report r = start("scroll osc --k " + std::to_string(a.k) + " --point " + a.point, cfg, bytes);
  const std::string s = subject(sc) + " at " + to_string(x);
  const auto sub = scrolls::scroll_osc_subspace(sc, a.k, x);
  const auto gen = scrolls::generic_osc_dim_certified(sc, a.k);
  const bool flexed = static_cast<std::size_t>(sub.dim()) < gen.value;
  r.add(s, "scroll_osc_dim k=" + std::to_string(a.k), std::to_string(sub.dim()), "exact rank of the block jet matrix");
  r.add(subject(sc), "generic_osc_dim k=" + std::to_string(a.k), std::to_string(gen.value),
        "certified on a " + std::to_string(gen.certificate.evaluations) + "-point grid");
  r.add(s, "is_flex k=" + std::to_string(a.k), flexed ? "yes" : "no", "osc dim below the generic value");
  r.add(s, "osc_subspace", exact::to_string(sub), "row echelon basis");
  return r;
}

Report flexes(const RunConfig& cfg) {
  const auto [bytes, sc] = load(cfg);
  Report r = start("scroll flexes", cfg, bytes);
  const auto fc = scrolls::flex_components(sc);
  const std::string s = subject(sc);
  if (fc.whole_scroll) {
    r.add(s, "flex_components k=2", "whole scroll", "every generating curve is a line");
    return r;
  }
  if (fc.components.empty() && fc.symbolic.empty()) r.add(s, "flex_components k=2", "empty", "computed");
  for (const auto& g : fc.components) r.add(s, "flex_component k=2", to_string(g), "computed");
  for (const auto& sym : fc.symbolic)
    r.add(s, "flex_component k=2",
          "subfibers over the " + std::to_string(sym.irrational_count) + " irrational roots of " +
              exact::to_string(sym.defining_form.affine(), 't') + " (curve " + std::to_string(sym.curve + 1) + ")",
          "symbolic; roots not rational");
  return r;
}

Report verify(const RunConfig& cfg) {
  const auto [bytes, sc] = load(cfg);
  Report r = start("scroll verify --budget " + std::to_string(cfg.sample_budget), cfg, bytes);
  const auto rep = scrolls::verify_scroll_properties(sc, cfg.sample_budget, cfg.seed);
  const std::string s = subject(sc);
  r.add(s, "samples", std::to_string(rep.base_points) + " base points, " + std::to_string(rep.scroll_points) +
                          " scroll points", "sampled");
  for (const auto& st : rep.statements) {
    std::string value = std::to_string(st.checked) + " checked, " + std::to_string(st.failures) + " failed";
    if (!st.first_failure.empty()) value += "; first: " + st.first_failure;
    const auto status = st.status();
    r.add(s, st.id, value, st.claim,
          status == scrolls::StatementStatus::fail   ? Status::fail
          : status == scrolls::StatementStatus::pass ? Status::pass
                                                     : Status::info);
  }
  return r;
}

Report discr_cmd(const RunConfig& cfg) {
  const auto [bytes, sc] = load(cfg);
  Report r = start("scroll discr", cfg, bytes);
  const std::string s = subject(sc);
  const auto fc = scrolls::flex_components(sc);
  if (fc.whole_scroll) {
    r.add(s, "discr_component", "not classified", "every generating curve is a line");
    return r;
  }
  for (const auto& g : fc.components) {
    const auto d = discr::discr_component(sc, g);
    const std::string gs = s + " " + to_string(g);
    r.add(gs, "dim", std::to_string(d.dim), "closed form");
    r.add(gs, "degree", std::to_string(d.degree), "closed form");
    r.add(gs, "span_dim", std::to_string(d.span_dim), "closed form");
    r.add(gs, "linear", d.linear ? "yes" : "no", "closed form");
    r.add(gs, "is_scroll", discr::to_string(d.is_scroll), "degree classification");
    r.add(gs, "rational_normal_scroll", d.is_rational_normal_scroll ? "yes" : "no", "degree equals 2(n-s)");
  }
  if (fc.components.empty()) r.add(s, "discr_component", "none", "no second-order flex components");
  for (const auto& sym : fc.symbolic)
    r.add(s, "discr_component", std::to_string(sym.irrational_count) + " linear subfiber components",
          "over irrational flex parameters of curve " + std::to_string(sym.curve + 1));
  return r;
}

}  // namespace

void add_scroll_commands(CLI::App& app, RunConfig& cfg, Action& action) {
  auto* scroll = app.add_subcommand("scroll", "Operations on a decomposable scroll");
  scroll->require_subcommand(1);
  auto args = std::make_shared<ScrollArgs>();

  auto* os = scroll->add_subcommand("osc", "Osculating space at a scroll point");
  os->add_option("file", cfg.input_path, "Scroll file")->required()->check(CLI::ExistingFile);
  os->add_option("--k", args->k, "Order")->required();
  os->add_option("--point", args->point, "Point: t=<rat>;<fiber> or inf;<fiber>")->required();
  os->callback([&, args] { action = [&cfg, args] { return osc(cfg, *args); }; });

  auto* fl = scroll->add_subcommand("flexes", "Second-order flex components");
  fl->add_option("file", cfg.input_path, "Scroll file")->required()->check(CLI::ExistingFile);
  fl->callback([&] { action = [&cfg] { return flexes(cfg); }; });

  auto* ve = scroll->add_subcommand("verify", "Check the structural flex statements on samples");
  ve->add_option("file", cfg.input_path, "Scroll file")->required()->check(CLI::ExistingFile);
  ve->add_option("--budget", cfg.sample_budget, "Random base points (>= 1)")->check(CLI::PositiveNumber);
  ve->callback([&] { action = [&cfg] { return verify(cfg); }; });

  auto* di = scroll->add_subcommand("discr", "Second discriminant components");
  di->add_option("file", cfg.input_path, "Scroll file")->required()->check(CLI::ExistingFile);
  di->callback([&] { action = [&cfg] { return discr_cmd(cfg); }; });
}

}  // namespace oscroll::cli
