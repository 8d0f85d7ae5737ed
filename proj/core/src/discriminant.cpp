#include <oscroll/discriminant.hpp>
#include <oscroll/errors.hpp>

#include "sampling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oscroll::discr {

using exact::BinForm;
using exact::QMatrix;
using exact::Rat;
using exact::UniPoly;
using scrolls::ComponentKind;

std::string to_string(Scrollness s) {
  switch (s) {
    case Scrollness::yes:
      return "yes";
    case Scrollness::no:
      return "no";
    case Scrollness::not_determined:
      return "not_determined";
  }
  return "?";
}

namespace {

void check_component(const DecomposableScroll& sc, const FlexComponent& g) {
  if (sc.all_lines()) throw std::invalid_argument("discriminant: every generating curve is a line (the scroll is all flexes)");
  if (g.level != 2) throw std::invalid_argument("discriminant: only second-order flex components are supported");
  if (g.kind == ComponentKind::segre_subscroll) {
    if (g.indices != sc.line_indices() || g.indices.empty())
      throw std::invalid_argument("discriminant: segre component must consist of exactly the line curves");
    return;
  }
  if (!g.base) throw std::invalid_argument("discriminant: subfiber component without a base point");
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < sc.n(); ++i)
    if (curves::is_flexed_at(sc.curve(i), 2, *g.base)) expected.push_back(i);
  bool has_non_line = false;
  for (auto i : expected) has_non_line = has_non_line || !sc.curve(i).is_line();
  if (g.indices != expected || !has_non_line)
    throw std::invalid_argument("discriminant: subfiber indices do not match the flexes over its base point");
}

}  // namespace

ScrollnessFlags classify_scrollness(const DecomposableScroll& sc, const FlexComponent& g) {
  if (g.kind != ComponentKind::segre_subscroll) throw std::invalid_argument("classify_scrollness: component is not a segre sub-scroll");
  check_component(sc, g);
  ScrollnessFlags f;
  bool all_low = true;
  bool singular_pattern = false;
  bool all_conics = true;
  std::size_t non_lines = 0;
  for (const auto& c : sc.curves()) {
    if (c.is_line()) continue;
    ++non_lines;
    const int d = c.degree();
    const std::size_t r = c.ambient_dim();
    f.degree += 2 * static_cast<std::size_t>(d - 1);
    all_low = all_low && (d == 2 || d == 3);
    all_conics = all_conics && d == 2;
    singular_pattern = singular_pattern || r >= 4 || (r == 3 && d >= 4);
  }
  f.rns_degree = 2 * non_lines;
  if (all_low)
    f.is_scroll = Scrollness::yes;
  else if (singular_pattern)
    f.is_scroll = Scrollness::no;
  else
    f.is_scroll = Scrollness::not_determined;
  f.is_rational_normal_scroll = all_conics;
  if (f.is_rational_normal_scroll != (f.degree == f.rns_degree))
    throw std::logic_error("classify_scrollness: degree cross-check disagrees with the conic test");
  return f;
}

DiscriminantComponent discr_component(const DecomposableScroll& sc, const FlexComponent& g) {
  check_component(sc, g);
  const std::size_t big_n = sc.ambient_dim();
  const std::size_t n = sc.n();
  DiscriminantComponent out;
  out.source = g;
  out.ambient_dual_dim = big_n;
  if (g.kind == ComponentKind::subfiber) {
    out.dim = big_n - 2 * n;
    out.degree = 1;
    out.linear = true;
    out.span_dim = out.dim;
    out.is_scroll = Scrollness::not_determined;
    out.is_rational_normal_scroll = false;
    return out;
  }
  const ScrollnessFlags f = classify_scrollness(sc, g);
  out.dim = big_n - 2 * n + 1;
  out.degree = f.degree;
  out.span_dim = big_n - 2 * g.indices.size();
  out.is_scroll = f.is_scroll;
  out.is_rational_normal_scroll = f.is_rational_normal_scroll;
  return out;
}

namespace {

struct Pencil {
  BinForm f;
  BinForm g;
};

// Pull back the two hyperplanes spanning the pencil through the axis.
// Returns nullopt when the axis has the wrong dimension, meets the curve, or
// the pencil is degenerate; `why` names the reason.
std::optional<Pencil> pencil_forms(const RationalCurve& c, const PencilAxis& axis, std::string* why) {
  const std::size_t r = c.ambient_dim();
  if (axis.subspace.ambient_dim() != r || axis.subspace.rank() + 1 != r) {
    if (why) *why = "axis is not of codimension 2";
    return std::nullopt;
  }
  const QMatrix ker = exact::nullspace(axis.subspace.basis().rows() ? axis.subspace.basis() : QMatrix(0, r + 1));
  if (ker.rows() != 2) {
    if (why) *why = "axis is not of codimension 2";
    return std::nullopt;
  }
  Pencil p{BinForm::zero(c.degree()), BinForm::zero(c.degree())};
  for (std::size_t j = 0; j <= r; ++j) {
    if (ker(0, j) != 0) p.f += ker(0, j) * c.forms()[j];
    if (ker(1, j) != 0) p.g += ker(1, j) * c.forms()[j];
  }
  const UniPoly h = exact::gcd(p.f.affine(), p.g.affine());
  if (h.is_zero() || !h.is_constant() || (p.f.vanishes_at_infinity() && p.g.vanishes_at_infinity())) {
    if (why) *why = "axis meets the curve";
    return std::nullopt;
  }
  return p;
}

UniPoly wronskian(const UniPoly& f, const UniPoly& g) { return f * g.derivative() - f.derivative() * g; }

}  // namespace

RamificationCount ramification_count(const RationalCurve& c, const PencilAxis& axis) {
  std::string why;
  const auto pencil = pencil_forms(c, axis, &why);
  if (!pencil) throw MathError("ramification_count: " + why);
  const UniPoly wa = wronskian(pencil->f.affine(), pencil->g.affine());
  const UniPoly wi = wronskian(pencil->f.at_infinity(), pencil->g.at_infinity());
  if (wa.is_zero() || wi.is_zero()) throw MathError("ramification_count: degenerate pencil (proportional forms)");
  RamificationCount out;
  out.affine_multiplicity = static_cast<std::size_t>(wa.degree());
  out.infinity_multiplicity = wi.vanishing_order_at_zero();
  out.with_multiplicity = out.affine_multiplicity + out.infinity_multiplicity;
  const std::size_t expected = 2 * static_cast<std::size_t>(c.degree() - 1);
  if (out.with_multiplicity != expected)
    throw MathError("ramification_count: total multiplicity " + std::to_string(out.with_multiplicity) +
                    " differs from 2d-2 = " + std::to_string(expected));
  out.distinct = static_cast<std::size_t>(exact::squarefree_part(wa).degree()) + (out.infinity_multiplicity > 0 ? 1 : 0);
  return out;
}

OracleResult degree_via_oracle(const DecomposableScroll& sc, const FlexComponent& g, std::size_t trials,
                               std::uint64_t seed) {
  if (g.kind != ComponentKind::segre_subscroll) throw std::invalid_argument("degree_via_oracle: component is not a segre sub-scroll");
  check_component(sc, g);
  if (trials == 0) throw std::invalid_argument("degree_via_oracle: trials must be positive");
  constexpr std::size_t kMaxAttempts = 50;
  detail::Rng rng(seed);
  OracleResult out;
  std::size_t formula = 0;
  for (const auto& c : sc.curves()) {
    if (c.is_line()) continue;
    formula += 2 * static_cast<std::size_t>(c.degree() - 1);
    const std::size_t r = c.ambient_dim();
    std::map<std::size_t, std::size_t> votes;
    for (std::size_t t = 0; t < trials; ++t) {
      std::optional<RamificationCount> rc;
      for (std::size_t attempt = 0; attempt < kMaxAttempts && !rc; ++attempt) {
        QMatrix pts(r - 1, r + 1);
        for (std::size_t i = 0; i + 1 < r; ++i)
          for (std::size_t j = 0; j <= r; ++j) pts(i, j) = Rat(detail::uniform_int(rng, -20, 20));
        const PencilAxis axis{LinearSubspace(r, pts)};
        if (!pencil_forms(c, axis, nullptr)) {
          ++out.resampled;
          continue;
        }
        rc = ramification_count(c, axis);
      }
      if (!rc) throw MathError("degree_via_oracle: degenerate axes exhausted the retry budget");
      ++votes[rc->distinct];
    }
    std::size_t best = 0, best_votes = 0;
    bool tie = false;
    for (const auto& [value, count] : votes) {  // ascending, so ties keep the smaller value
      if (count > best_votes) {
        best = value;
        best_votes = count;
        tie = false;
      } else if (count == best_votes) {
        tie = true;
      }
    }
    out.per_curve.push_back(best);
    out.tie_flags.push_back(tie);
    out.degree += best;
  }
  if (out.degree != formula)
    throw MathError("degree_via_oracle: ramification oracle gives " + std::to_string(out.degree) +
                    " but 2*sum(d_i - 1) = " + std::to_string(formula));
  return out;
}

}  // namespace oscroll::discr
