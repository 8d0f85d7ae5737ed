#include <oscroll/scroll.hpp>

#include "sampling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oscroll::scrolls {

std::string to_string(ComponentKind k) { return k == ComponentKind::subfiber ? "subfiber" : "segre_subscroll"; }

std::string indices_to_string(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + "}";
}

std::string to_string(const FlexComponent& g) {
  std::string s = to_string(g.kind) + " S=" + indices_to_string(g.indices);
  if (g.base) s += " over " + to_string(*g.base);
  return s;
}

std::string to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::empty:
      return "empty";
    case ProfileKind::span_of:
      return "span_of";
    case ProfileKind::whole_fiber:
      return "whole_fiber";
    case ProfileKind::undetermined:
      return "undetermined";
  }
  return "?";
}

FlexComponents flex_components(const DecomposableScroll& sc) {
  FlexComponents out;
  const auto lines = sc.line_indices();
  if (lines.size() == sc.n()) {
    out.whole_scroll = true;
    return out;
  }
  if (!lines.empty()) out.components.push_back(FlexComponent{ComponentKind::segre_subscroll, std::nullopt, lines, 2});

  // Rational flex parameters of the non-line curves, and the loci for the
  // membership test of every curve at those parameters.
  std::vector<FlexLocus> loci;
  std::set<CurvePoint> bases;
  for (std::size_t i = 0; i < sc.n(); ++i) {
    loci.push_back(curves::inflectional_locus(sc.curve(i), 2));
    if (sc.curve(i).is_line()) continue;
    const FlexLocus& l = loci.back();
    bases.insert(l.rational_points.begin(), l.rational_points.end());
    if (l.mode == curves::LocusMode::finite && l.irrational_count() > 0)
      out.symbolic.push_back(SymbolicFlexes{i, *l.defining_form, l.irrational_count()});
  }
  for (const auto& p : bases) {
    FlexComponent g{ComponentKind::subfiber, p, {}, 2};
    for (std::size_t i = 0; i < sc.n(); ++i)
      if (loci[i].contains(p)) g.indices.push_back(i);
    out.components.push_back(std::move(g));
  }
  return out;
}

FiberProfile fiber_flex_profile(const DecomposableScroll& sc, std::size_t k, const CurvePoint& p,
                                std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("fiber_flex_profile: k must be at least 2");
  const std::size_t n = sc.n();
  std::vector<bool> in_k(n), in_km1(n);
  for (std::size_t i = 0; i < n; ++i) {
    in_k[i] = curves::is_flexed_at(sc.curve(i), k, p);
    in_km1[i] = curves::is_flexed_at(sc.curve(i), k - 1, p);
  }
  std::vector<std::size_t> s_k;
  for (std::size_t i = 0; i < n; ++i)
    if (in_k[i]) s_k.push_back(i);
  const bool any_km1 = std::find(in_km1.begin(), in_km1.end(), true) != in_km1.end();

  FiberProfile out;
  if (n == 2) {
    if (any_km1 || s_k.size() == 2) {
      out.kind = ProfileKind::whole_fiber;
    } else if (s_k.empty()) {
      out.kind = ProfileKind::empty;
    } else {
      out.kind = ProfileKind::span_of;
      out.indices = s_k;
    }
  } else if (s_k.size() == n) {
    out.kind = ProfileKind::whole_fiber;
  } else {
    bool exact_pattern = true;
    for (auto i : s_k) exact_pattern = exact_pattern && !in_km1[i];
    if (exact_pattern) {
      out.kind = s_k.empty() ? ProfileKind::empty : ProfileKind::span_of;
      out.indices = s_k;
    } else {
      out.kind = ProfileKind::undetermined;
    }
  }

  // Sampled evidence: vertices, two general points, and a general point of
  // the predicted span.
  const std::size_t nk = n * k;
  detail::Rng rng(seed);
  auto flexed = [&](const ScrollPoint& x) { return scroll_osc_dim(sc, k, x) < nk; };
  auto in_span = [&](const ScrollPoint& x) {
    for (std::size_t i = 0; i < n; ++i)
      if (x.fiber[i] != 0 && std::find(out.indices.begin(), out.indices.end(), i) == out.indices.end()) return false;
    return true;
  };
  auto predicted = [&](const ScrollPoint& x) -> std::optional<bool> {
    switch (out.kind) {
      case ProfileKind::empty:
        return false;
      case ProfileKind::whole_fiber:
        return true;
      case ProfileKind::span_of:
        return in_span(x);
      case ProfileKind::undetermined:
        return std::nullopt;
    }
    return std::nullopt;
  };
  std::vector<ScrollPoint> samples;
  for (std::size_t i = 0; i < n; ++i) samples.push_back(ScrollPoint::vertex(p, n, i));
  for (int j = 0; j < 2; ++j) {
    std::vector<Rat> f(n);
    for (auto& v : f) v = detail::random_nonzero_rat(rng);
    samples.push_back(ScrollPoint::make(p, f));
  }
  if (out.indices.size() >= 2) {
    std::vector<Rat> f(n, Rat(0));
    for (auto i : out.indices) f[i] = detail::random_nonzero_rat(rng);
    samples.push_back(ScrollPoint::make(p, f));
  }
  for (const auto& x : samples) {
    const bool fx = flexed(x);
    ++out.samples;
    if (fx) ++out.flexed_samples;
    const auto pred = predicted(x);
    if (pred && *pred != fx) out.evidence_consistent = false;
  }
  return out;
}

}  // namespace oscroll::scrolls
