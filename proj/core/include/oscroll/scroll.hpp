#pragma once

#include <oscroll/curve_ops.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oscroll::scrolls {

using curves::CurvePoint;
using curves::FlexLocus;
using curves::RationalCurve;
using exact::LinearSubspace;
using exact::QMatrix;
using exact::Rat;

/// Scroll generated by n >= 2 curves over a common P^1. Curve i occupies
/// the coordinate block offsets[i] .. offsets[i] + r_i of P^N.
class DecomposableScroll {
 public:
  explicit DecomposableScroll(std::vector<RationalCurve> curves);

  std::size_t n() const { return curves_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<RationalCurve>& curves() const { return curves_; }
  const RationalCurve& curve(std::size_t i) const { return curves_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::vector<int> degrees() const;
  std::vector<std::size_t> spans() const;  // r_i
  // 0-based indices of the curves with r_i = 1.
  std::vector<std::size_t> line_indices() const;
  bool all_lines() const { return line_indices().size() == n(); }
  std::vector<std::string> labels() const;

 private:
  std::vector<RationalCurve> curves_;
  std::vector<std::size_t> offsets_;
  std::size_t ambient_dim_ = 0;
};

// Runs the embedding checks on every curve; throws MathError on failure.
DecomposableScroll build_scroll(std::vector<RationalCurve> curves);

/// x = sum_i fiber[i] * p_i on the fibre over `base`. Canonical form: the
/// largest index with a nonzero coordinate is the pivot and is scaled to 1.
struct ScrollPoint {
  CurvePoint base;
  std::vector<Rat> fiber;

  static ScrollPoint make(const CurvePoint& base, std::vector<Rat> fiber);
  static ScrollPoint vertex(const CurvePoint& base, std::size_t n, std::size_t i);
  std::size_t pivot() const;
  // Indices i with fiber[i] != 0; each is a valid pivot.
  std::vector<std::size_t> support() const;

  friend bool operator==(const ScrollPoint& a, const ScrollPoint& b) {
    return a.base == b.base && a.fiber == b.fiber;
  }
};

std::string to_string(const ScrollPoint& x);

// Homogeneous coordinates of x in P^N.
std::vector<Rat> coordinates(const DecomposableScroll& sc, const ScrollPoint& x);

// Block jet matrix in the chart where fiber[pivot] = 1. The top block row is
// lambda_i * M^i_k for every curve; below it, for each i != pivot, the block
// M^i_{min(k-1, r_i)} in column block i, and a zero block in the pivot slot.
// For k = 0 only the top block is present. `pivot` defaults to x.pivot().
QMatrix scroll_jet_matrix(const DecomposableScroll& sc, std::size_t k, const ScrollPoint& x,
                          std::optional<std::size_t> pivot = std::nullopt);

std::size_t scroll_osc_dim(const DecomposableScroll& sc, std::size_t k, const ScrollPoint& x);
LinearSubspace scroll_osc_subspace(const DecomposableScroll& sc, std::size_t k, const ScrollPoint& x);

/// s(k): maximal osculating dimension, from the block matrix with the base
/// parameter and the n-1 fibre coordinates as indeterminates.
struct GenericOscDim {
  std::size_t value = 0;
  exact::CertifiedRank certificate;
};
GenericOscDim generic_osc_dim_certified(const DecomposableScroll& sc, std::size_t k);
std::size_t generic_osc_dim(const DecomposableScroll& sc, std::size_t k);

// scroll_osc_dim < s(k).
bool is_flex(const DecomposableScroll& sc, const ScrollPoint& x, std::size_t k);
bool is_flex(const DecomposableScroll& sc, const ScrollPoint& x, std::size_t k, std::size_t generic_dim);

// Closed form of the generic osculating dimension of a rational normal
// surface scroll; requires 1 <= r1 <= r2 and k >= 1.
std::size_t rns_osc_dim_formula(std::size_t r1, std::size_t r2, std::size_t k);

// ---------------------------------------------------------------------------
// Second-order flex components.

enum class ComponentKind { subfiber, segre_subscroll };
std::string to_string(ComponentKind k);

struct FlexComponent {
  ComponentKind kind = ComponentKind::subfiber;
  std::optional<CurvePoint> base;    // subfiber only
  std::vector<std::size_t> indices;  // 0-based, ascending
  std::size_t level = 2;
};

// Flex parameters of a curve that are not rational; reported as a form.
struct SymbolicFlexes {
  std::size_t curve = 0;
  exact::BinForm defining_form;
  std::size_t irrational_count = 0;
};

struct FlexComponents {
  bool whole_scroll = false;  // every generating curve is a line
  std::vector<FlexComponent> components;
  std::vector<SymbolicFlexes> symbolic;
};

FlexComponents flex_components(const DecomposableScroll& sc);

// Indices printed 1-based, e.g. "{1,3}".
std::string indices_to_string(const std::vector<std::size_t>& idx);
std::string to_string(const FlexComponent& g);

enum class ProfileKind { empty, span_of, whole_fiber, undetermined };
std::string to_string(ProfileKind k);

struct FiberProfile {
  ProfileKind kind = ProfileKind::empty;
  std::vector<std::size_t> indices;  // span_of only
  // Sampled evidence: points tested on the fibre and how many were flexed
  // (flexed meaning osculating dimension below nk).
  std::size_t samples = 0;
  std::size_t flexed_samples = 0;
  bool evidence_consistent = true;
};

// Requires k >= 2.
FiberProfile fiber_flex_profile(const DecomposableScroll& sc, std::size_t k, const CurvePoint& p,
                                std::uint64_t seed = 1);

}  // namespace oscroll::scrolls
