#include <oscroll/constructions.hpp>
#include <oscroll/discriminant.hpp>
#include <oscroll/errors.hpp>

#include "sampling.hpp"

#include <memory>
#include <sstream>

namespace oscroll::constructions {

using curves::CurvePoint;
using curves::LocusMode;
using exact::Rat;
using scrolls::ScrollPoint;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::stated:
      return "STATED";
    case Provenance::trivial:
      return "TRIVIAL";
    case Provenance::derived:
      return "DERIVED";
  }
  return "?";
}

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"ex3.1",     "ex3.2", "ex3.3",   "ex3.5-off",  "ex3.5-on",
                                            "ex3.6-on",  "cubic", "quartic-F0", "quartic-F2"};
  return ids;
}

namespace {

using ScrollPtr = std::shared_ptr<const DecomposableScroll>;

long param(const ScenarioParams& p, const std::string& key, long fallback) {
  const auto it = p.values.find(key);
  return it == p.values.end() ? fallback : it->second;
}

Outcome equal(std::size_t actual, std::size_t expected) { return {std::to_string(actual), actual == expected}; }
Outcome equal(const std::string& actual, const std::string& expected) { return {actual, actual == expected}; }

std::string locus_summary(const curves::FlexLocus& l) {
  if (l.mode != LocusMode::finite) return to_string(l.mode);
  return "finite(" + std::to_string(l.distinct_count) + ")";
}

std::string components_summary(const scrolls::FlexComponents& fc) {
  if (fc.whole_scroll) return "whole_scroll";
  std::string s;
  for (const auto& g : fc.components) s += (s.empty() ? "" : "; ") + to_string(g);
  for (const auto& sym : fc.symbolic)
    s += (s.empty() ? "" : "; ") + std::string("curve ") + std::to_string(sym.curve + 1) + ": " +
         std::to_string(sym.irrational_count) + " irrational flexes";
  return s.empty() ? "none" : s;
}

// Fibre-flex count of a flex_components result: subfiber components plus
// irrational flex parameters reported symbolically.
std::size_t fibre_count(const scrolls::FlexComponents& fc) {
  std::size_t n = 0;
  for (const auto& g : fc.components) n += g.kind == scrolls::ComponentKind::subfiber;
  for (const auto& s : fc.symbolic) n += s.irrational_count;
  return n;
}

std::vector<ScrollPoint> random_points(const DecomposableScroll& sc, std::size_t count, detail::Rng& rng,
                                       std::optional<std::size_t> forced_zero = std::nullopt,
                                       std::optional<std::size_t> only = std::nullopt) {
  std::vector<ScrollPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    const CurvePoint base = CurvePoint::affine(detail::random_rat(rng));
    std::vector<Rat> f(sc.n());
    for (std::size_t j = 0; j < sc.n(); ++j) {
      if (only)
        f[j] = j == *only ? Rat(1) : Rat(0);
      else
        f[j] = forced_zero && *forced_zero == j ? Rat(0) : detail::random_nonzero_rat(rng);
    }
    out.push_back(ScrollPoint::make(base, f));
  }
  return out;
}

std::string points_label(const std::vector<ScrollPoint>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size() && i < 3; ++i) s += (i ? " " : "") + to_string(xs[i]);
  if (xs.size() > 3) s += " ... (" + std::to_string(xs.size()) + " points)";
  return s;
}

Expectation flags_at(ScrollPtr sc, std::vector<ScrollPoint> xs, std::size_t k, bool expected, Provenance prov,
                     const std::string& where) {
  return {"is_flex", "k=" + std::to_string(k) + " " + where + ": " + points_label(xs),
          expected ? "all true" : "all false", prov, [sc, xs, k, expected] {
            const std::size_t s = scrolls::generic_osc_dim(*sc, k);
            std::size_t hits = 0;
            for (const auto& x : xs) hits += scrolls::is_flex(*sc, x, k, s);
            const bool pass = expected ? hits == xs.size() : hits == 0;
            return Outcome{std::to_string(hits) + "/" + std::to_string(xs.size()) + " flexed", pass};
          }};
}

Expectation components_are(ScrollPtr sc, const std::string& expected, Provenance prov) {
  return {"flex_components", "k=2", expected, prov,
          [sc, expected] { return equal(components_summary(scrolls::flex_components(*sc)), expected); }};
}

Expectation curve_locus(ScrollPtr sc, std::size_t i, std::size_t k, const std::string& expected, Provenance prov) {
  return {"inflectional_locus", "curve " + std::to_string(i + 1) + " k=" + std::to_string(k), expected, prov,
          [sc, i, k, expected] { return equal(locus_summary(curves::inflectional_locus(sc->curve(i), k)), expected); }};
}

Expectation segre_discriminant(ScrollPtr sc, const std::string& expected, Provenance prov) {
  return {"discr_component", "segre component", expected, prov, [sc, expected] {
            const scrolls::FlexComponent g{scrolls::ComponentKind::segre_subscroll, std::nullopt, sc->line_indices(), 2};
            const auto d = discr::discr_component(*sc, g);
            std::ostringstream os;
            os << "dim=" << d.dim << " degree=" << d.degree << " span=" << d.span_dim
               << " scroll=" << discr::to_string(d.is_scroll) << " rns=" << (d.is_rational_normal_scroll ? "yes" : "no");
            return equal(os.str(), expected);
          }};
}

Expectation oracle_degree(ScrollPtr sc, std::size_t expected, std::uint64_t seed, Provenance prov) {
  return {"degree_via_oracle", "segre component, trials=5", std::to_string(expected), prov, [sc, expected, seed] {
            const scrolls::FlexComponent g{scrolls::ComponentKind::segre_subscroll, std::nullopt, sc->line_indices(), 2};
            try {
              return equal(discr::degree_via_oracle(*sc, g, 5, seed).degree, expected);
            } catch (const MathError& e) {
              return Outcome{e.what(), false};
            }
          }};
}

bool proportional(const exact::BinForm& a, const exact::BinForm& b) {
  if (a.degree() != b.degree()) return false;
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

// Project the degree-4 rational normal curve from a point on (or off) its
// osculating-plane developable; retries on projections that fail the
// embedding checks.
struct Projected {
  RationalCurve gamma;
  LinearSubspace center;
  std::optional<Rat> t_star;
  RationalCurve image;
};

Projected project_quartic(bool on, std::uint64_t seed) {
  const RationalCurve gamma = rational_normal_curve(4);
  for (std::uint64_t attempt = 0; attempt < 50; ++attempt) {
    const std::uint64_t s = seed * 1000003ULL + attempt;
    LinearSubspace center;
    std::optional<Rat> t_star;
    if (on) {
      auto [q, t] = point_on_developable(gamma, 2, s);
      center = q;
      t_star = t;
    } else {
      center = center_off_developable(gamma, 2, 0, s);
    }
    try {
      RationalCurve image = curves::project(gamma, center);
      return {gamma, center, t_star, std::move(image)};
    } catch (const MathError&) {
    }
  }
  throw MathError("scenario: no embedded projection found after retries");
}

void add_epsilon_expectations(Scenario& sc, ScrollPtr ptr, const Projected& pr, bool has_line) {
  const auto gamma = std::make_shared<RationalCurve>(pr.gamma);
  const auto center = pr.center;
  const auto image = std::make_shared<RationalCurve>(pr.image);
  const Rat t_star = *pr.t_star;
  sc.expectations.push_back({"contains_in_osculating", "Gamma=rnc4, m=2, T=" + exact::to_string(center), "1 or 2",
                             Provenance::stated, [gamma, center] {
                               const auto l = curves::contains_in_osculating(*gamma, 2, center);
                               return Outcome{locus_summary(l), l.mode == LocusMode::finite &&
                                                                    (l.distinct_count == 1 || l.distinct_count == 2)};
                             }});
  sc.expectations.push_back({"contains_in_osculating", "contains t*=" + exact::to_string(t_star), "true",
                             Provenance::trivial, [gamma, center, t_star] {
                               const bool in = curves::contains_in_osculating(*gamma, 2, center)
                                                   .contains(CurvePoint::affine(t_star));
                               return Outcome{in ? "true" : "false", in};
                             }});
  sc.expectations.push_back(
      {"inflectional_locus", "projected curve k=2 vs membership locus", "same parameters", Provenance::derived,
       [gamma, center, image] {
         const auto a = curves::contains_in_osculating(*gamma, 2, center);
         const auto b = curves::inflectional_locus(*image, 2);
         const bool same = a.mode == b.mode && a.distinct_count == b.distinct_count &&
                           (a.mode != LocusMode::finite || proportional(*a.defining_form, *b.defining_form));
         return Outcome{locus_summary(b) + " vs " + locus_summary(a), same};
       }});
  sc.expectations.push_back({"flex_components", "fibre flexes beyond the lines", "1 or 2", Provenance::stated,
                             [ptr, has_line] {
                               const auto fc = scrolls::flex_components(*ptr);
                               bool segre = false;
                               for (const auto& g : fc.components)
                                 segre = segre || g.kind == scrolls::ComponentKind::segre_subscroll;
                               const std::size_t eps = fibre_count(fc);
                               return Outcome{components_summary(fc), segre == has_line && (eps == 1 || eps == 2)};
                             }});
  sc.expectations.push_back(
      {"flex_components", "epsilon agrees with the membership count", "equal", Provenance::derived, [ptr, gamma, center] {
         const std::size_t eps = fibre_count(scrolls::flex_components(*ptr));
         const std::size_t count = curves::contains_in_osculating(*gamma, 2, center).distinct_count;
         return Outcome{std::to_string(eps) + " vs " + std::to_string(count), eps == count};
       }});
}

Scenario build(const std::string& id, const ScenarioParams& p) {
  detail::Rng rng(p.seed);
  std::map<std::string, std::string> params{{"seed", std::to_string(p.seed)}};
  auto make = [&](DecomposableScroll sc) {
    return Scenario{id, params, std::move(sc), {}};
  };

  if (id == "ex3.1") {
    const long r1 = param(p, "r1", 2), r2 = param(p, "r2", 3);
    if (r1 < 1 || r1 > r2) throw InputError("ex3.1: need 1 <= r1 <= r2");
    params["r1"] = std::to_string(r1);
    params["r2"] = std::to_string(r2);
    Scenario s = make(rational_normal_scroll({static_cast<int>(r1), static_cast<int>(r2)}));
    auto ptr = std::make_shared<const DecomposableScroll>(s.scroll);
    for (std::size_t k = 1; k <= 5; ++k) {
      const std::size_t f = scrolls::rns_osc_dim_formula(r1, r2, k);
      s.expectations.push_back({"generic_osc_dim", "k=" + std::to_string(k), std::to_string(f), Provenance::stated,
                                [ptr, k, f] { return equal(scrolls::generic_osc_dim(*ptr, k), f); }});
      const auto xs = random_points(*ptr, 3, rng);
      s.expectations.push_back({"scroll_osc_dim", "k=" + std::to_string(k) + " off C1: " + points_label(xs),
                                std::to_string(f), Provenance::stated, [ptr, k, f, xs] {
                                  std::string got;
                                  bool ok = true;
                                  for (const auto& x : xs) {
                                    const std::size_t d = scrolls::scroll_osc_dim(*ptr, k, x);
                                    got += (got.empty() ? "" : ",") + std::to_string(d);
                                    ok = ok && d == f;
                                  }
                                  return Outcome{got, ok};
                                }});
    }
    return s;
  }

  if (id == "ex3.2") {
    const long k = param(p, "k", 2), r = param(p, "r", 3);
    if (k < 2 || r < 3) throw InputError("ex3.2: need k >= 2 and r >= 3");
    params["k"] = std::to_string(k);
    params["r"] = std::to_string(r);
    std::vector<int> exps{0, 1};
    for (long e = k + 1; e <= k + r - 1; ++e) exps.push_back(static_cast<int>(e));
    Scenario s = make(scrolls::build_scroll(
        {rational_normal_curve(1), monomial_curve(exps, static_cast<int>(k + r - 1))}));
    auto ptr = std::make_shared<const DecomposableScroll>(s.scroll);
    const CurvePoint p0 = CurvePoint::affine(0);
    std::vector<ScrollPoint> fibre{ScrollPoint::vertex(p0, 2, 0), ScrollPoint::vertex(p0, 2, 1)};
    for (int i = 0; i < 3; ++i) fibre.push_back(ScrollPoint::make(p0, {detail::random_nonzero_rat(rng), Rat(1)}));
    for (std::size_t h = 2; h <= static_cast<std::size_t>(k); ++h) {
      s.expectations.push_back({"osc_dim", "curve 2 at t=0, order " + std::to_string(h), "1", Provenance::stated,
                                [ptr, h, p0] { return equal(curves::osc_dim(ptr->curve(1), h, p0), 1); }});
      s.expectations.push_back({"scroll_osc_dim", "order " + std::to_string(h) + " on the fibre over t=0: " +
                                                      points_label(fibre),
                                "3", Provenance::stated, [ptr, h, fibre] {
                                  std::string got;
                                  bool ok = true;
                                  for (const auto& x : fibre) {
                                    const std::size_t d = scrolls::scroll_osc_dim(*ptr, h, x);
                                    got += (got.empty() ? "" : ",") + std::to_string(d);
                                    ok = ok && d == 3;
                                  }
                                  return Outcome{got, ok};
                                }});
      s.expectations.push_back(
          {"scroll_osc_subspace", "order " + std::to_string(h) + " at p_2 over t=0", "span of C1 and the tangent of C2",
           Provenance::stated, [ptr, h, p0] {
             const auto n = ptr->ambient_dim();
             const auto expected = exact::join(
                 exact::embed_block(LinearSubspace::whole(1), n, 0),
                 exact::embed_block(curves::osc_subspace(ptr->curve(1), 1, p0), n, ptr->offset(1)));
             const auto got = scrolls::scroll_osc_subspace(*ptr, h, ScrollPoint::vertex(p0, 2, 1));
             return Outcome{"dim " + std::to_string(got.dim()), got == expected};
           }});
    }
    for (std::size_t h = 2; h <= std::max<std::size_t>(3, static_cast<std::size_t>(k)); ++h)
      s.expectations.push_back({"fiber_flex_profile", "order " + std::to_string(h) + " over t=0", "whole_fiber",
                                Provenance::stated, [ptr, h, p0] {
                                  const auto prof = scrolls::fiber_flex_profile(*ptr, h, p0);
                                  return Outcome{to_string(prof.kind),
                                                 prof.kind == scrolls::ProfileKind::whole_fiber && prof.evidence_consistent};
                                }});
    return s;
  }

  if (id == "ex3.3") {
    const long m = param(p, "m", 2), d = param(p, "d", m + 2);
    if (m < 2 || d < m + 2) throw InputError("ex3.3: need m >= 2 and d >= m + 2");
    params["m"] = std::to_string(m);
    params["d"] = std::to_string(d);
    const RationalCurve gamma = rational_normal_curve(static_cast<int>(d));
    std::optional<RationalCurve> c2;
    LinearSubspace center;
    for (std::uint64_t attempt = 0; attempt < 50 && !c2; ++attempt) {
      center = center_off_developable(gamma, static_cast<std::size_t>(m), static_cast<std::size_t>(d - m - 2),
                                      p.seed * 1000003ULL + attempt);
      try {
        c2 = curves::project(gamma, center);
      } catch (const MathError&) {
      }
    }
    if (!c2) throw MathError("ex3.3: no embedded projection found after retries");
    Scenario s = make(scrolls::build_scroll({rational_normal_curve(static_cast<int>(m)), *c2}));
    auto ptr = std::make_shared<const DecomposableScroll>(s.scroll);
    const auto mm = static_cast<std::size_t>(m);
    const auto gptr = std::make_shared<RationalCurve>(gamma);
    s.expectations.push_back({"osculating_meets", "Gamma=rnc" + std::to_string(d) + ", m=" + std::to_string(m) +
                                                      ", center dim " + std::to_string(d - m - 2),
                              "empty", Provenance::stated, [gptr, mm, center] {
                                return equal(locus_summary(curves::osculating_meets(*gptr, mm, center)), "empty");
                              }});
    s.expectations.push_back({"spans", "(r1, r2) and N", "(" + std::to_string(m) + "," + std::to_string(m + 1) +
                                                             ") N=" + std::to_string(2 * m + 2),
                              Provenance::stated, [ptr, m] {
                                std::ostringstream os;
                                os << "(" << ptr->curve(0).ambient_dim() << "," << ptr->curve(1).ambient_dim()
                                   << ") N=" << ptr->ambient_dim();
                                return equal(os.str(), "(" + std::to_string(m) + "," + std::to_string(m + 1) +
                                                           ") N=" + std::to_string(2 * m + 2));
                              }});
    s.expectations.push_back(curve_locus(ptr, 0, mm, "empty", Provenance::stated));
    s.expectations.push_back(curve_locus(ptr, 1, mm, "empty", Provenance::stated));
    s.expectations.push_back({"generic_osc_dim", "k=" + std::to_string(m), std::to_string(2 * m), Provenance::derived,
                              [ptr, mm] { return equal(scrolls::generic_osc_dim(*ptr, mm), 2 * mm); }});
    auto xs = random_points(*ptr, 10, rng);
    for (auto& x : random_points(*ptr, 3, rng, std::nullopt, 0)) xs.push_back(x);
    for (auto& x : random_points(*ptr, 3, rng, std::nullopt, 1)) xs.push_back(x);
    s.expectations.push_back(flags_at(ptr, xs, mm, false, Provenance::stated, "sampled points"));

    auto balanced = std::make_shared<const DecomposableScroll>(
        rational_normal_scroll({static_cast<int>(m), static_cast<int>(m)}));
    s.expectations.push_back({"inflectional_locus", "balanced scroll (m,m), both curves, k=m", "empty",
                              Provenance::stated, [balanced, mm] {
                                const auto a = curves::inflectional_locus(balanced->curve(0), mm);
                                const auto b = curves::inflectional_locus(balanced->curve(1), mm);
                                return equal(locus_summary(a) + "," + locus_summary(b), "empty,empty");
                              }});
    auto bxs = random_points(*balanced, 10, rng);
    for (auto& x : random_points(*balanced, 3, rng, std::nullopt, 0)) bxs.push_back(x);
    s.expectations.push_back(flags_at(balanced, bxs, mm, false, Provenance::stated, "balanced scroll"));
    return s;
  }

  if (id == "ex3.5-off" || id == "ex3.5-on" || id == "ex3.6-on") {
    const bool on = id != "ex3.5-off";
    const bool has_line = id != "ex3.6-on";
    const Projected pr = project_quartic(on, p.seed);
    params["center"] = exact::to_string(pr.center);
    if (pr.t_star) params["t*"] = exact::to_string(*pr.t_star);
    Scenario s = make(scrolls::build_scroll({rational_normal_curve(has_line ? 1 : 2), pr.image}));
    auto ptr = std::make_shared<const DecomposableScroll>(s.scroll);
    if (!on) {
      const auto gamma = std::make_shared<RationalCurve>(pr.gamma);
      const auto center = pr.center;
      s.expectations.push_back({"contains_in_osculating", "Gamma=rnc4, m=2, T=" + exact::to_string(center), "empty",
                                Provenance::derived, [gamma, center] {
                                  return equal(locus_summary(curves::contains_in_osculating(*gamma, 2, center)), "empty");
                                }});
      s.expectations.push_back(curve_locus(ptr, 1, 2, "empty", Provenance::stated));
      s.expectations.push_back(components_are(ptr, "segre_subscroll S={1}", Provenance::stated));
      s.expectations.push_back(flags_at(ptr, random_points(*ptr, 5, rng, std::nullopt, 0), 2, true,
                                        Provenance::stated, "on C1"));
      s.expectations.push_back(
          flags_at(ptr, random_points(*ptr, 5, rng), 2, false, Provenance::stated, "off C1"));
      return s;
    }
    add_epsilon_expectations(s, ptr, pr, has_line);
    if (!has_line) {
      const Rat t_star = *pr.t_star;
      s.expectations.push_back({"discr_component", "subfiber over t*=" + exact::to_string(t_star),
                                "dim=2 degree=1 linear", Provenance::stated, [ptr, t_star] {
                                  const auto fc = scrolls::flex_components(*ptr);
                                  for (const auto& g : fc.components) {
                                    if (!g.base || !(*g.base == CurvePoint::affine(t_star))) continue;
                                    const auto d = discr::discr_component(*ptr, g);
                                    std::ostringstream os;
                                    os << "dim=" << d.dim << " degree=" << d.degree << (d.linear ? " linear" : "");
                                    return equal(os.str(), "dim=2 degree=1 linear");
                                  }
                                  return Outcome{"no subfiber over t*", false};
                                }});
    }
    return s;
  }

  if (id == "cubic" || id == "quartic-F0" || id == "quartic-F2") {
    DecomposableScroll sc = id == "cubic"        ? rational_normal_scroll({1, 2})
                            : id == "quartic-F0" ? rational_normal_scroll({2, 2})
                                                 : rational_normal_scroll({1, 3});
    Scenario s = make(std::move(sc));
    auto ptr = std::make_shared<const DecomposableScroll>(s.scroll);
    if (id == "quartic-F0") {
      s.expectations.push_back(components_are(ptr, "none", Provenance::stated));
      s.expectations.push_back(flags_at(ptr, random_points(*ptr, 10, rng), 2, false, Provenance::stated, "random"));
      return s;
    }
    s.expectations.push_back(components_are(ptr, "segre_subscroll S={1}", Provenance::stated));
    s.expectations.push_back(
        flags_at(ptr, random_points(*ptr, 10, rng, std::nullopt, 0), 2, true, Provenance::stated, "on C1"));
    s.expectations.push_back(flags_at(ptr, random_points(*ptr, 10, rng), 2, false, Provenance::stated, "off C1"));
    if (id == "cubic") {
      s.expectations.push_back(segre_discriminant(ptr, "dim=1 degree=2 span=2 scroll=yes rns=yes", Provenance::stated));
      s.expectations.push_back(oracle_degree(ptr, 2, p.seed, Provenance::stated));
    } else {
      s.expectations.push_back(segre_discriminant(ptr, "dim=2 degree=4 span=3 scroll=yes rns=no", Provenance::stated));
      s.expectations.push_back(oracle_degree(ptr, 4, p.seed, Provenance::stated));
    }
    return s;
  }

  throw InputError("unknown scenario id '" + id + "'");
}

}  // namespace

Scenario scenario(const std::string& id, const ScenarioParams& params) { return build(id, params); }

}  // namespace oscroll::constructions
