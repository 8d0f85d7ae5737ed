#pragma once

#include <oscroll/curve.hpp>
#include <oscroll/subspace.hpp>

#include <optional>
#include <string>
#include <vector>

namespace oscroll::curves {

using exact::LinearSubspace;

// (k+1) x (r+1): row j holds the j-th derivatives of the dehomogenised forms.
PolyMatrix jet_matrix(const RationalCurve& c, std::size_t k, Chart chart);
QMatrix jet_matrix(const RationalCurve& c, std::size_t k, const CurvePoint& at);

std::size_t osc_dim(const RationalCurve& c, std::size_t k, const CurvePoint& at);
LinearSubspace osc_subspace(const RationalCurve& c, std::size_t k, const CurvePoint& at);

// Pointwise k-th order flex test. For k > r every point counts (the
// osculating space cannot reach the expected dimension k).
bool is_flexed_at(const RationalCurve& c, std::size_t k, const CurvePoint& at);

enum class LocusMode { empty, finite, whole_curve };

/// Parameter set on P^1 given by the common zeros of a family of minors.
struct FlexLocus {
  std::size_t k = 0;
  LocusMode mode = LocusMode::empty;
  std::optional<BinForm> defining_form;  // squarefree; present iff mode == finite
  std::size_t distinct_count = 0;        // roots in P^1 over C (finite mode)
  std::vector<CurvePoint> rational_points;
  // Raw minor gcds in the two charts, kept for inspection only.
  UniPoly affine_gcd;
  UniPoly infinity_gcd;

  bool contains(const CurvePoint& p) const;
  std::size_t irrational_count() const { return distinct_count - rational_points.size(); }
};

std::string to_string(LocusMode m);

// Requires k >= 1.
FlexLocus inflectional_locus(const RationalCurve& c, std::size_t k);

// Parameters t whose m-th osculating space meets the subspace q. For q a
// point this is membership q in Osc^m_t. Throws MathError if the generic
// rank of the m-jet matrix is below m+1.
FlexLocus osculating_meets(const RationalCurve& c, std::size_t m, const LinearSubspace& q);
// q must be a single point.
FlexLocus contains_in_osculating(const RationalCurve& c, std::size_t m, const LinearSubspace& q);

enum class Check { pass, fail, not_checked };
std::string to_string(Check c);

struct NodePair {
  CurvePoint first;
  CurvePoint second;
};

struct EmbeddingReport {
  bool nondegenerate = false;
  bool unramified = false;
  Check injective = Check::not_checked;
  std::vector<CurvePoint> ramified_points;  // rational ones
  std::optional<NodePair> node;             // a rational node, when one is found
  std::string note;

  // "embedding verified": the parametrization is an embedding. This does not
  // claim very ampleness of an abstract linear system.
  bool verified() const { return nondegenerate && unramified && injective == Check::pass; }
  bool failed() const { return !nondegenerate || !unramified || injective == Check::fail; }
};

inline constexpr int kNodeCheckMaxDegree = 12;

EmbeddingReport check_embedding(const RationalCurve& c);

// Node search on its own. not_checked when d exceeds kNodeCheckMaxDegree.
Check injectivity(const RationalCurve& c, std::optional<NodePair>* node = nullptr);

// Throws MathError with a description if the report is a failure.
void require_embedding(const RationalCurve& c);

// Linear projection from `center`. The complement is spanned by the identity
// columns outside the echelon pivots of the center. Throws MathError if the
// center meets the curve or the image is not an embedded nondegenerate curve.
RationalCurve project(const RationalCurve& c, const LinearSubspace& center);

}  // namespace oscroll::curves
