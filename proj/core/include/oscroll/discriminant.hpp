#pragma once

#include <oscroll/scroll.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oscroll::discr {

using curves::RationalCurve;
using exact::LinearSubspace;
using scrolls::DecomposableScroll;
using scrolls::FlexComponent;

enum class Scrollness { yes, no, not_determined };
std::string to_string(Scrollness s);

struct ScrollnessFlags {
  Scrollness is_scroll = Scrollness::not_determined;
  bool is_rational_normal_scroll = false;
  // 2 * sum_{i not a line} (d_i - 1) and 2 (n - s); equal iff every
  // non-line curve is a conic.
  std::size_t degree = 0;
  std::size_t rns_degree = 0;
};

/// Invariants of the component of the second discriminant locus made of
/// the hyperplanes containing Osc^2 along a flex component.
struct DiscriminantComponent {
  FlexComponent source;
  std::size_t ambient_dual_dim = 0;  // N
  std::size_t dim = 0;
  std::size_t degree = 0;
  bool linear = false;               // subfiber source: a linear space
  std::size_t span_dim = 0;
  Scrollness is_scroll = Scrollness::not_determined;
  bool is_rational_normal_scroll = false;
};

// Throws std::invalid_argument if g does not match sc or every curve is a line.
DiscriminantComponent discr_component(const DecomposableScroll& sc, const FlexComponent& g);

// g must be a segre_subscroll component of sc.
ScrollnessFlags classify_scrollness(const DecomposableScroll& sc, const FlexComponent& g);

/// Codimension-2 subspace of a curve's ambient P^r, the axis of a pencil of
/// hyperplanes.
struct PencilAxis {
  LinearSubspace subspace;
};

struct RamificationCount {
  std::size_t with_multiplicity = 0;
  std::size_t distinct = 0;
  std::size_t affine_multiplicity = 0;
  std::size_t infinity_multiplicity = 0;
};

// Ramification of the pencil map c -> P^1 defined by the hyperplanes
// through the axis. Throws MathError if the axis meets the curve, the pencil
// is degenerate, or the total multiplicity differs from 2d - 2.
RamificationCount ramification_count(const RationalCurve& c, const PencilAxis& axis);

struct OracleResult {
  std::size_t degree = 0;
  // Per non-line curve: the modal distinct count and whether the mode was
  // decided by the tie rule (smaller value wins).
  std::vector<std::size_t> per_curve;
  std::vector<bool> tie_flags;
  std::size_t resampled = 0;
};

// Sums, over the non-line curves, the modal distinct ramification count of
// `trials` random axes spanned by r_i - 1 integer points in [-20, 20].
// Throws MathError if the sum disagrees with 2 * sum (d_i - 1) or if
// degenerate samples exhaust the retry budget.
OracleResult degree_via_oracle(const DecomposableScroll& sc, const FlexComponent& g, std::size_t trials,
                               std::uint64_t seed = 1);

}  // namespace oscroll::discr
