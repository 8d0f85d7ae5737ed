#include "commands.hpp"

#include <oscroll/curve_ops.hpp>
#include <oscroll/errors.hpp>
#include <oscroll/io.hpp>

#include <fstream>
#include <memory>

namespace oscroll::cli {

using curves::CurvePoint;
using curves::RationalCurve;

namespace {

struct CurveArgs {
  std::size_t k = 2;
  std::string t;
  std::string center_path;
  std::string out_path;
};

Report start(const std::string& command, const RunConfig& cfg, const std::string& bytes) {
  Report r;
  r.command = command;
  r.input_digest = sha256_hex(bytes);
  r.seed = cfg.seed;
  return r;
}

std::string curve_subject(const RationalCurve& c) { return c.label().empty() ? "curve" : c.label(); }

std::string points_list(const std::vector<CurvePoint>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + to_string(p);
  return s.empty() ? "-" : s;
}

Status check_status(curves::Check c) {
  return c == curves::Check::pass ? Status::pass : c == curves::Check::fail ? Status::fail : Status::info;
}

Report analyze(const RunConfig& cfg) {
  const std::string bytes = io::read_file(cfg.input_path);
  const RationalCurve c = io::parse_curve(bytes);
  Report r = start("curve analyze", cfg, bytes);
  const std::string s = curve_subject(c);
  r.add(s, "ambient_dim", std::to_string(c.ambient_dim()), "input");
  r.add(s, "degree", std::to_string(c.degree()), "input");

  const auto e = curves::check_embedding(c);
  r.add(s, "nondegenerate", e.nondegenerate ? "yes" : "no", "exact rank of the coefficient matrix",
        e.nondegenerate ? Status::pass : Status::fail);
  r.add(s, "unramified", e.unramified ? "yes" : "no (cusp at " + points_list(e.ramified_points) + ")",
        "common zeros of the 1-jet minors", e.unramified ? Status::pass : Status::fail);
  std::string inj = to_string(e.injective);
  if (e.node) inj += " (node " + to_string(e.node->first) + " ~ " + to_string(e.node->second) + ")";
  r.add(s, "injective", inj, e.note.empty() ? "resultant elimination of secant minors" : e.note,
        check_status(e.injective));
  r.add(s, "embedding", e.verified() ? "embedding verified" : e.failed() ? "not an embedding" : "not fully checked",
        "parametrization check; very ampleness is not asserted",
        e.verified() ? Status::pass : e.failed() ? Status::fail : Status::info);

  if (e.nondegenerate) {
    for (std::size_t k = 1; k <= c.ambient_dim(); ++k) {
      const auto g = exact::generic_rank(curves::jet_matrix(c, k, curves::Chart::affine));
      r.add(s, "generic_osc_dim k=" + std::to_string(k), std::to_string(g.rank - 1), "certified generic rank");
    }
  }
  return r;
}

Report flexes(const RunConfig& cfg, std::size_t k) {
  const std::string bytes = io::read_file(cfg.input_path);
  const RationalCurve c = io::parse_curve(bytes);
  Report r = start("curve flexes --k " + std::to_string(k), cfg, bytes);
  const std::string s = curve_subject(c);
  const auto l = curves::inflectional_locus(c, k);
  std::string mode = to_string(l.mode);
  if (l.mode == curves::LocusMode::finite) mode = std::to_string(l.distinct_count) + " flexes";
  r.add(s, "inflectional_locus k=" + std::to_string(k), mode, "gcd of maximal jet minors in both charts");
  if (l.mode == curves::LocusMode::finite) {
    r.add(s, "rational flex points", points_list(l.rational_points), "exact roots of the defining form");
    r.add(s, "irrational flex points", std::to_string(l.irrational_count()), "degree of the remaining factor");
    r.add(s, "defining form (affine chart)", exact::to_string(l.defining_form->affine(), 't'), "squarefree part");
  }
  return r;
}

Report project_cmd(const RunConfig& cfg, const CurveArgs& a) {
  const std::string bytes = io::read_file(cfg.input_path);
  const std::string center_bytes = io::read_file(a.center_path);
  const RationalCurve c = io::parse_curve(bytes);
  const auto center = io::parse_subspace(center_bytes);
  Report r = start("curve project", cfg, bytes + center_bytes);
  const RationalCurve img = curves::project(c, center);
  const std::string s = curve_subject(c);
  r.add(s, "center", exact::to_string(center), "input");
  r.add(img.label(), "ambient_dim", std::to_string(img.ambient_dim()), "computed");
  for (std::size_t i = 0; i < img.forms().size(); ++i)
    r.add(img.label(), "form " + std::to_string(i), exact::to_string(img.forms()[i].affine(), 't'),
          "affine chart");
  r.add(img.label(), "embedding", "embedding verified", "checked after projection", Status::pass);
  if (!a.out_path.empty()) {
    std::ofstream out(a.out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + a.out_path + "'");
    out << io::to_json(img) << "\n";
    r.add(img.label(), "written", a.out_path, "curve file");
  }
  return r;
}

Report osc(const RunConfig& cfg, const CurveArgs& a) {
  const std::string bytes = io::read_file(cfg.input_path);
  const RationalCurve c = io::parse_curve(bytes);
  const CurvePoint p = io::parse_curve_point(a.t);
  Report r = start("curve osc --k " + std::to_string(a.k) + " --t " + a.t, cfg, bytes);
  const std::string s = curve_subject(c) + " at " + to_string(p);
  const auto sub = curves::osc_subspace(c, a.k, p);
  r.add(s, "osc_dim k=" + std::to_string(a.k), std::to_string(sub.dim()), "exact rank of the jet matrix");
  r.add(s, "osc_subspace", exact::to_string(sub), "row echelon basis");
  r.add(s, "flexed", curves::is_flexed_at(c, a.k, p) ? "yes" : "no", "osc dim below k");
  return r;
}

}  // namespace

void add_curve_commands(CLI::App& app, RunConfig& cfg, Action& action) {
  auto* curve = app.add_subcommand("curve", "Operations on a single rational curve");
  curve->require_subcommand(1);
  auto args = std::make_shared<CurveArgs>();

  auto* an = curve->add_subcommand("analyze", "Embedding checks and generic osculating dimensions");
  an->add_option("file", cfg.input_path, "Curve file")->required()->check(CLI::ExistingFile);
  an->callback([&] { action = [&cfg] { return analyze(cfg); }; });

  auto* fl = curve->add_subcommand("flexes", "k-th order inflectional locus");
  fl->add_option("file", cfg.input_path, "Curve file")->required()->check(CLI::ExistingFile);
  fl->add_option("--k", args->k, "Order")->required()->check(CLI::PositiveNumber);
  fl->callback([&, args] { action = [&cfg, args] { return flexes(cfg, args->k); }; });

  auto* pr = curve->add_subcommand("project", "Linear projection from a center");
  pr->add_option("file", cfg.input_path, "Curve file")->required()->check(CLI::ExistingFile);
  pr->add_option("--center", args->center_path, "Subspace file")->required()->check(CLI::ExistingFile);
  pr->add_option("--out", args->out_path, "Write the projected curve here");
  pr->callback([&, args] { action = [&cfg, args] { return project_cmd(cfg, *args); }; });

  auto* os = curve->add_subcommand("osc", "Osculating space at a point");
  os->add_option("file", cfg.input_path, "Curve file")->required()->check(CLI::ExistingFile);
  os->add_option("--k", args->k, "Order")->required();
  os->add_option("--t", args->t, "Parameter: t=<rat>, <rat> or inf")->required();
  os->callback([&, args] { action = [&cfg, args] { return osc(cfg, *args); }; });
}

}  // namespace oscroll::cli
