#include <oscroll/curve_ops.hpp>
#include <oscroll/errors.hpp>

#include <stdexcept>

namespace oscroll::curves {

PolyMatrix jet_matrix(const RationalCurve& c, std::size_t k, Chart chart) {
  std::vector<UniPoly> row = c.chart_polys(chart);
  PolyMatrix m(k + 1, row.size());
  for (std::size_t j = 0; j <= k; ++j) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      m(j, i) = row[i];
      row[i] = row[i].derivative();
    }
  }
  return m;
}

QMatrix jet_matrix(const RationalCurve& c, std::size_t k, const CurvePoint& at) {
  return exact::evaluate(jet_matrix(c, k, at.chart), at.param);
}

std::size_t osc_dim(const RationalCurve& c, std::size_t k, const CurvePoint& at) {
  return exact::rank_exact(jet_matrix(c, k, at)) - 1;
}

LinearSubspace osc_subspace(const RationalCurve& c, std::size_t k, const CurvePoint& at) {
  return LinearSubspace(c.ambient_dim(), jet_matrix(c, k, at));
}

bool is_flexed_at(const RationalCurve& c, std::size_t k, const CurvePoint& at) {
  if (k > c.ambient_dim()) return true;
  return exact::rank_exact(jet_matrix(c, k, at)) < k + 1;
}

bool FlexLocus::contains(const CurvePoint& p) const {
  switch (mode) {
    case LocusMode::empty:
      return false;
    case LocusMode::whole_curve:
      return true;
    case LocusMode::finite: {
      const auto [t0, t1] = p.homogeneous();
      return defining_form->evaluate(t0, t1) == 0;
    }
  }
  return false;
}

std::string to_string(LocusMode m) {
  switch (m) {
    case LocusMode::empty:
      return "empty";
    case LocusMode::finite:
      return "finite";
    case LocusMode::whole_curve:
      return "whole_curve";
  }
  return "?";
}

namespace {

// Merge the affine-chart gcd with the infinity-chart gcd, which only
// contributes its behaviour at s = 0.
FlexLocus locus_from_gcds(std::size_t k, UniPoly affine_gcd, UniPoly infinity_gcd) {
  FlexLocus out;
  out.k = k;
  out.affine_gcd = std::move(affine_gcd);
  out.infinity_gcd = std::move(infinity_gcd);
  if (out.affine_gcd.is_zero() || out.infinity_gcd.is_zero()) {
    out.mode = LocusMode::whole_curve;
    return out;
  }
  const UniPoly sqf = exact::squarefree_part(out.affine_gcd);
  const bool at_infinity = out.infinity_gcd(Rat(0)) == 0;
  out.distinct_count = static_cast<std::size_t>(sqf.degree()) + (at_infinity ? 1 : 0);
  if (out.distinct_count == 0) {
    out.mode = LocusMode::empty;
    return out;
  }
  out.mode = LocusMode::finite;
  out.defining_form = BinForm::homogenize(sqf, static_cast<int>(out.distinct_count));
  for (const auto& r : exact::rational_roots(sqf)) out.rational_points.push_back(CurvePoint::affine(r));
  if (at_infinity) out.rational_points.push_back(CurvePoint::infinity());
  return out;
}

PolyMatrix augmented(const PolyMatrix& jets, const QMatrix& extra) {
  PolyMatrix m = jets;
  for (std::size_t i = 0; i < extra.rows(); ++i) {
    std::vector<UniPoly> row;
    for (const auto& q : extra.row(i)) row.push_back(UniPoly::constant(q));
    m.append_row(row);
  }
  return m;
}

}  // namespace

FlexLocus inflectional_locus(const RationalCurve& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("inflectional_locus: k must be at least 1");
  if (k > c.ambient_dim()) {
    FlexLocus out;
    out.k = k;
    out.mode = LocusMode::whole_curve;
    return out;
  }
  return locus_from_gcds(k, exact::minors_gcd(jet_matrix(c, k, Chart::affine), k + 1),
                         exact::minors_gcd(jet_matrix(c, k, Chart::infinity), k + 1));
}

FlexLocus osculating_meets(const RationalCurve& c, std::size_t m, const LinearSubspace& q) {
  if (q.ambient_dim() != c.ambient_dim()) throw std::invalid_argument("osculating_meets: ambient mismatch");
  if (q.is_empty()) throw std::invalid_argument("osculating_meets: empty subspace");
  const PolyMatrix affine_jets = jet_matrix(c, m, Chart::affine);
  if (m > c.ambient_dim() || exact::generic_rank(affine_jets).rank < m + 1)
    throw MathError("osculating_meets: the " + std::to_string(m) +
                    "-jet matrix has generic rank below " + std::to_string(m + 1));
  const std::size_t size = m + 1 + q.rank();
  if (size > c.ambient_dim() + 1) {
    // Dimension count: every osculating space meets q.
    FlexLocus out;
    out.k = m;
    out.mode = LocusMode::whole_curve;
    return out;
  }
  // Parameters where the m-jet matrix itself drops rank also make every
  // augmented minor vanish and are therefore included.
  return locus_from_gcds(m, exact::minors_gcd(augmented(affine_jets, q.basis()), size),
                         exact::minors_gcd(augmented(jet_matrix(c, m, Chart::infinity), q.basis()), size));
}

FlexLocus contains_in_osculating(const RationalCurve& c, std::size_t m, const LinearSubspace& q) {
  if (q.dim() != 0) throw std::invalid_argument("contains_in_osculating: q must be a point");
  return osculating_meets(c, m, q);
}

std::string to_string(Check c) {
  switch (c) {
    case Check::pass:
      return "pass";
    case Check::fail:
      return "fail";
    case Check::not_checked:
      return "not_checked";
  }
  return "?";
}

EmbeddingReport check_embedding(const RationalCurve& c) {
  EmbeddingReport rep;
  rep.nondegenerate = exact::rank_exact(c.coefficient_matrix()) == c.ambient_dim() + 1;
  const FlexLocus ram = inflectional_locus(c, 1);
  rep.unramified = ram.mode == LocusMode::empty;
  rep.ramified_points = ram.rational_points;
  if (!rep.unramified) {
    rep.injective = Check::not_checked;
    rep.note = "injectivity not checked on a ramified parametrization";
  } else if (c.degree() > kNodeCheckMaxDegree) {
    rep.injective = Check::not_checked;
    rep.note = "injectivity not checked above degree " + std::to_string(kNodeCheckMaxDegree);
  } else {
    rep.injective = injectivity(c, &rep.node);
  }
  return rep;
}

void require_embedding(const RationalCurve& c) {
  const EmbeddingReport rep = check_embedding(c);
  const std::string who = c.label().empty() ? std::string("curve") : "curve '" + c.label() + "'";
  if (!rep.nondegenerate) throw MathError(who + " is degenerate (forms linearly dependent)");
  if (!rep.unramified) {
    std::string where;
    for (const auto& p : rep.ramified_points) where += " " + to_string(p);
    throw MathError(who + " is ramified (cusp)" + (where.empty() ? std::string() : " at" + where));
  }
  if (rep.injective == Check::fail) {
    std::string where;
    if (rep.node) where = " at " + to_string(rep.node->first) + ", " + to_string(rep.node->second);
    throw MathError(who + " is not injective (node)" + where);
  }
}

RationalCurve project(const RationalCurve& c, const LinearSubspace& center) {
  const std::size_t r = c.ambient_dim();
  if (center.ambient_dim() != r) throw std::invalid_argument("project: center lives in a different space");
  if (center.is_empty()) throw std::invalid_argument("project: empty center");
  if (center.rank() + 1 > r) throw std::invalid_argument("project: center dimension must be at most r-2");

  const auto pivots = center.pivot_columns();
  std::vector<bool> is_pivot(r + 1, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BinForm> out;
  for (std::size_t j = 0; j <= r; ++j) {
    if (is_pivot[j]) continue;
    BinForm f = c.forms()[j];
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Rat& b = center.basis()(k, j);
      if (b != 0) f += (-b) * c.forms()[pivots[k]];
    }
    out.push_back(std::move(f));
  }

  UniPoly g;
  bool all_vanish_at_infinity = true;
  for (const auto& f : out) {
    g = exact::gcd(g, f.affine());
    all_vanish_at_infinity = all_vanish_at_infinity && f.vanishes_at_infinity();
  }
  if (g.is_zero() || !g.is_constant() || all_vanish_at_infinity)
    throw MathError("project: the center meets the curve");

  RationalCurve image(std::move(out), c.label().empty() ? std::string() : c.label() + "/proj");
  require_embedding(image);
  return image;
}

}  // namespace oscroll::curves
