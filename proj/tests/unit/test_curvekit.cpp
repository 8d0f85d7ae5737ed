#include "oracles.hpp"

#include <oscroll/constructions.hpp>
#include <oscroll/curve_ops.hpp>
#include <oscroll/errors.hpp>

#include <gtest/gtest.h>

using namespace oscroll;
using namespace oscroll::curves;
using exact::BinForm;
using exact::LinearSubspace;
using exact::QMatrix;
using oracle::rat;

namespace {

// Curve with forms t0^(d-e) t1^e for the given exponents.
RationalCurve mono(std::vector<int> exps, int d) {
  std::vector<BinForm> forms;
  for (int e : exps) forms.push_back(BinForm::monomial(d, e));
  return RationalCurve(forms, "test");
}

// Forms given by affine polynomials, homogenised to degree d.
RationalCurve affine_curve(const std::vector<std::vector<long>>& polys, int d) {
  std::vector<BinForm> forms;
  for (const auto& p : polys) {
    std::vector<Rat> c;
    for (long x : p) c.emplace_back(x);
    forms.push_back(BinForm::homogenize(UniPoly(c), d));
  }
  return RationalCurve(forms, "test");
}

const RationalCurve kConic = mono({0, 1, 2}, 2);
const RationalCurve kCubic = mono({0, 1, 2, 3}, 3);
const RationalCurve kQuartic0134 = mono({0, 1, 3, 4}, 4);

}  // namespace

TEST(CurvePoint, Canonicalisation) {
  EXPECT_EQ(CurvePoint::in_chart(Chart::infinity, rat(2)), CurvePoint::affine(rat(1, 2)));
  EXPECT_EQ(CurvePoint::in_chart(Chart::infinity, rat(0)), CurvePoint::infinity());
  EXPECT_TRUE(CurvePoint::affine(rat(5)) < CurvePoint::infinity());
  EXPECT_EQ(to_string(CurvePoint::infinity()), "inf");
  EXPECT_EQ(to_string(CurvePoint::affine(rat(-1, 3))), "t=-1/3");
}

TEST(RationalCurve, RejectsMalformedInput) {
  EXPECT_THROW(RationalCurve({BinForm::monomial(2, 0)}), std::invalid_argument);
  EXPECT_THROW(RationalCurve({BinForm::monomial(2, 0), BinForm::monomial(3, 1)}), std::invalid_argument);
  // Common factor t1 -> base point at t = 0.
  EXPECT_THROW(RationalCurve({BinForm::monomial(2, 1), BinForm::monomial(2, 2)}), std::invalid_argument);
  // Common factor t0 -> base point at infinity.
  EXPECT_THROW(RationalCurve({BinForm::monomial(2, 0), BinForm::monomial(2, 1)}), std::invalid_argument);
}

TEST(JetMatrix, MonomialRowsAtZero) {
  const QMatrix m = jet_matrix(kConic, 2, CurvePoint::affine(0));
  EXPECT_EQ(m, QMatrix(3, 3, {rat(1), rat(0), rat(0), rat(0), rat(1), rat(0), rat(0), rat(0), rat(2)}));
  const QMatrix q = jet_matrix(kQuartic0134, 2, CurvePoint::affine(0));
  EXPECT_EQ(q, QMatrix(3, 4, {rat(1), rat(0), rat(0), rat(0), rat(0), rat(1), rat(0), rat(0), rat(0), rat(0),
                              rat(0), rat(0)}));
  const auto line = jet_matrix(mono({0, 1}, 1), 3, Chart::affine);
  EXPECT_EQ(line.rows(), 4u);
  EXPECT_TRUE(line(2, 0).is_zero() && line(3, 1).is_zero());
  EXPECT_EQ(line(0, 1), (UniPoly{rat(0), rat(1)}));
}

TEST(OscDim, KnownValues) {
  const RationalCurve rnc4 = constructions::rational_normal_curve(4);
  EXPECT_EQ(osc_dim(rnc4, 2, CurvePoint::affine(rat(3, 7))), 2u);
  EXPECT_EQ(osc_dim(kQuartic0134, 2, CurvePoint::affine(0)), 1u);
  EXPECT_EQ(osc_dim(mono({0, 1}, 1), 5, CurvePoint::affine(rat(2))), 1u);
  EXPECT_EQ(osc_subspace(kCubic, 1, CurvePoint::affine(0)),
            LinearSubspace(3, QMatrix(2, 4, {rat(1), rat(0), rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)})));
  EXPECT_EQ(osc_subspace(kConic, 2, CurvePoint::affine(rat(5))), LinearSubspace::whole(2));
  EXPECT_EQ(osc_subspace(kQuartic0134, 3, CurvePoint::affine(0)),
            LinearSubspace(3, QMatrix(3, 4, {rat(1), rat(0), rat(0), rat(0), rat(0), rat(1), rat(0), rat(0), rat(0),
                                              rat(0), rat(1), rat(0)})));
}

TEST(OscDim, AgreesWithDerivativeOracleInBothCharts) {
  oracle::Rng rng(41);
  const RationalCurve c = affine_curve({{1, 0, 0, 2, 0}, {0, 1, 3, 0, 0}, {0, 0, 1, 0, -1}, {2, 0, 0, 0, 1}}, 4);
  for (int i = 0; i < 20; ++i) {
    const Rat t = rng.nonzero();
    for (std::size_t k = 1; k <= 4; ++k) {
      const std::size_t d = osc_dim(c, k, CurvePoint::affine(t));
      EXPECT_EQ(d, oracle::curve_osc_dim(c, k, t));
      // The same point in the chart at infinity.
      EXPECT_EQ(d, osc_dim(c, k, CurvePoint::in_chart(Chart::infinity, 1 / t)));
    }
  }
}

TEST(OscDim, MonotoneInK) {
  oracle::Rng rng(43);
  for (int i = 0; i < 10; ++i) {
    const CurvePoint p = CurvePoint::affine(rng.rational());
    std::size_t prev = 0;
    for (std::size_t k = 0; k <= 5; ++k) {
      const auto s = osc_subspace(kQuartic0134, k, p);
      EXPECT_GE(static_cast<std::size_t>(s.dim()), prev);
      if (k > 0) {
        EXPECT_TRUE(s.contains(osc_subspace(kQuartic0134, k - 1, p)));
      }
      prev = static_cast<std::size_t>(s.dim());
    }
  }
}

TEST(InflectionalLocus, RationalNormalCurvesHaveNone) {
  for (int d = 2; d <= 6; ++d) {
    const auto c = constructions::rational_normal_curve(d);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(d); ++k)
      EXPECT_EQ(inflectional_locus(c, k).mode, LocusMode::empty) << "d=" << d << " k=" << k;
  }
}

TEST(InflectionalLocus, Quartic0134FlexesAtZeroAndInfinity) {
  const auto l = inflectional_locus(kQuartic0134, 2);
  ASSERT_EQ(l.mode, LocusMode::finite);
  EXPECT_EQ(l.distinct_count, 2u);
  EXPECT_EQ(l.rational_points, (std::vector<CurvePoint>{CurvePoint::affine(0), CurvePoint::infinity()}));
  EXPECT_EQ(l.affine_gcd, (UniPoly{rat(0), rat(1)}));
  EXPECT_EQ(l.infinity_gcd, (UniPoly{rat(0), rat(1)}));
  EXPECT_EQ(l.irrational_count(), 0u);
}

TEST(InflectionalLocus, ContainsExactlyTheRankDropParameters) {
  // Plane quartic (1, t, t^4 + t^2): affine flexes where the second
  // derivative 12t^2 + 2 vanishes (two irrational parameters); at infinity
  // the chart (s^4, s^3, 1 + s^2) has vanishing first derivative.
  const RationalCurve c = affine_curve({{1}, {0, 1}, {0, 0, 1, 0, 1}}, 4);
  const auto l = inflectional_locus(c, 2);
  ASSERT_EQ(l.mode, LocusMode::finite);
  EXPECT_EQ(l.rational_points, std::vector<CurvePoint>{CurvePoint::infinity()});
  EXPECT_EQ(l.irrational_count(), 2u);
  // Order 2 above the span: the whole curve.
  EXPECT_EQ(inflectional_locus(kConic, 3).mode, LocusMode::whole_curve);
  EXPECT_THROW(inflectional_locus(kConic, 0), std::invalid_argument);
}

TEST(InflectionalLocus, RandomPointsOutsideAreNotFlexes) {
  oracle::Rng rng(47);
  const auto l = inflectional_locus(kQuartic0134, 2);
  for (int i = 0; i < 20; ++i) {
    const CurvePoint p = CurvePoint::affine(rng.nonzero());
    EXPECT_EQ(l.contains(p), is_flexed_at(kQuartic0134, 2, p));
    EXPECT_EQ(is_flexed_at(kQuartic0134, 2, p), oracle::curve_osc_dim(kQuartic0134, 2, p.param) < 2);
  }
}

TEST(OsculatingMeets, PointOnCurveLiesInItsOwnOsculatingSpaces) {
  const auto g = constructions::rational_normal_curve(4);
  oracle::Rng rng(53);
  for (int i = 0; i < 5; ++i) {
    const Rat t = rng.rational();
    const auto q = LinearSubspace::point(g.evaluate(CurvePoint::affine(t)));
    for (std::size_t m = 0; m <= 3; ++m) EXPECT_TRUE(contains_in_osculating(g, m, q).contains(CurvePoint::affine(t)));
  }
}

TEST(OsculatingMeets, OffAndOnTheDevelopable) {
  const auto g = constructions::rational_normal_curve(4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto off = constructions::center_off_developable(g, 2, 0, seed);
    EXPECT_EQ(contains_in_osculating(g, 2, off).mode, LocusMode::empty);
    auto [on, t] = constructions::point_on_developable(g, 2, seed);
    const auto l = contains_in_osculating(g, 2, on);
    ASSERT_EQ(l.mode, LocusMode::finite);
    EXPECT_TRUE(l.contains(CurvePoint::affine(t)));
    EXPECT_TRUE(l.distinct_count == 1 || l.distinct_count == 2);
    // Direct check: q lies in the span of the jets at t.
    EXPECT_TRUE(osc_subspace(g, 2, CurvePoint::affine(t)).contains(on));
  }
}

TEST(Embedding, RationalNormalCurvesPass) {
  for (int d = 1; d <= 6; ++d) {
    const auto e = check_embedding(constructions::rational_normal_curve(d));
    EXPECT_TRUE(e.verified()) << d;
  }
}

TEST(Embedding, CuspIsRamified) {
  const auto e = check_embedding(mono({0, 2, 3}, 3));
  EXPECT_TRUE(e.nondegenerate);
  EXPECT_FALSE(e.unramified);
  EXPECT_EQ(e.ramified_points, std::vector<CurvePoint>{CurvePoint::affine(0)});
  EXPECT_TRUE(e.failed());
  EXPECT_THROW(require_embedding(mono({0, 2, 3}, 3)), MathError);
}

TEST(Embedding, NodeIsDetected) {
  // (1, t^2 - 1, t^3 - t): t = 1 and t = -1 both map to (1 : 0 : 0).
  const RationalCurve c = affine_curve({{1}, {-1, 0, 1}, {0, -1, 0, 1}}, 3);
  const auto e = check_embedding(c);
  EXPECT_TRUE(e.unramified);
  EXPECT_EQ(e.injective, Check::fail);
  ASSERT_TRUE(e.node.has_value());
  std::vector<CurvePoint> pair{e.node->first, e.node->second};
  std::sort(pair.begin(), pair.end());
  EXPECT_EQ(pair, (std::vector<CurvePoint>{CurvePoint::affine(-1), CurvePoint::affine(1)}));
}

TEST(Embedding, NodeThroughInfinity) {
  const auto g = constructions::rational_normal_curve(3);
  // Projecting the twisted cubic from a point on a secant line creates a node.
  // Secant through t = 0 and t = infinity: e0 + e3.
  const auto center = LinearSubspace::point({rat(1), rat(0), rat(0), rat(1)});
  EXPECT_THROW(project(g, center), MathError);
  std::optional<NodePair> node;
  // The same image built directly: forms x0 - x3, x1, x2.
  const RationalCurve img({BinForm(3, {rat(1), rat(0), rat(0), rat(-1)}), BinForm::monomial(3, 1),
                           BinForm::monomial(3, 2)});
  EXPECT_EQ(injectivity(img, &node), Check::fail);
  ASSERT_TRUE(node.has_value());
  std::vector<CurvePoint> pair{node->first, node->second};
  std::sort(pair.begin(), pair.end());
  EXPECT_EQ(pair, (std::vector<CurvePoint>{CurvePoint::affine(0), CurvePoint::infinity()}));
}

TEST(Projection, FromAPointOffTheCurve) {
  const auto g = constructions::rational_normal_curve(4);
  const auto center = LinearSubspace::point({rat(1), rat(-3), rat(2), rat(5), rat(-1, 2)});
  const auto img = project(g, center);
  EXPECT_EQ(img.ambient_dim(), 3u);
  EXPECT_EQ(img.degree(), 4);
  EXPECT_TRUE(check_embedding(img).verified());
}

TEST(Projection, CenterOnTheCurveIsRejected) {
  const auto g = constructions::rational_normal_curve(4);
  EXPECT_THROW(project(g, LinearSubspace::point(g.evaluate(CurvePoint::affine(rat(2))))), MathError);
  EXPECT_THROW(project(g, LinearSubspace::point(g.evaluate(CurvePoint::infinity()))), MathError);
  EXPECT_THROW(project(g, LinearSubspace::empty(4)), std::invalid_argument);
}

TEST(Projection, FlexesOfImageMatchMembershipLocus) {
  const auto g = constructions::rational_normal_curve(4);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto [q, t] = constructions::point_on_developable(g, 2, seed);
    RationalCurve img = g;
    try {
      img = project(g, q);
    } catch (const MathError&) {
      continue;  // the sampled point happened to give a singular image
    }
    const auto a = contains_in_osculating(g, 2, q);
    const auto b = inflectional_locus(img, 2);
    EXPECT_EQ(a.distinct_count, b.distinct_count);
    EXPECT_EQ(a.rational_points, b.rational_points);
    EXPECT_TRUE(b.contains(CurvePoint::affine(t)));
  }
}

TEST(Projection, CompositionMatchesProjectionFromTheJoin) {
  // Projecting from p then from the image of p' equals projecting from the
  // line <p, p'>, up to a linear change of coordinates: compare osculating
  // dimensions and flex loci, which are projective invariants.
  const auto g = constructions::rational_normal_curve(5);
  const auto p1 = LinearSubspace::point({rat(1), rat(2), rat(-1), rat(3), rat(1), rat(-2)});
  const auto p2 = LinearSubspace::point({rat(0), rat(1), rat(4), rat(-1), rat(2), rat(1)});
  const auto once = project(g, p1);
  // Image of p2 under the first projection: x_j - p1_j x_0 for j != 0 (the
  // center's echelon pivot is column 0 and p1 is already normalised).
  std::vector<Rat> img2;
  for (std::size_t j = 1; j < 6; ++j) img2.push_back(p2.basis()(0, j) - p1.basis()(0, j) * p2.basis()(0, 0));
  const auto twice = project(once, LinearSubspace::point(img2));
  const auto direct = project(g, exact::join(p1, p2));
  EXPECT_EQ(twice.ambient_dim(), direct.ambient_dim());
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto a = inflectional_locus(twice, k);
    const auto b = inflectional_locus(direct, k);
    EXPECT_EQ(a.mode, b.mode);
    EXPECT_EQ(a.distinct_count, b.distinct_count);
    if (a.defining_form && b.defining_form) {
      EXPECT_EQ(a.defining_form->affine().monic(), b.defining_form->affine().monic());
    }
  }
}
