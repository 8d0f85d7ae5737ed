#pragma once

#include <oscroll/scroll.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oscroll::scrolls {

enum class StatementStatus { pass, fail, vacuous };
std::string to_string(StatementStatus s);

struct StatementResult {
  std::string id;
  std::string claim;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;  // witnessing instance of the first failure
  StatementStatus status() const {
    if (failures) return StatementStatus::fail;
    return checked ? StatementStatus::pass : StatementStatus::vacuous;
  }
};

struct VerificationReport {
  std::vector<StatementResult> statements;  // fixed order
  std::size_t base_points = 0;
  std::size_t scroll_points = 0;
  bool all_passed() const;
};

// Checks the structural statements about osculating spaces and flexes of a
// decomposable scroll at all rational flex witnesses of the generating
// curves (orders 2..4) plus `sample_budget` random base points. In these
// checks a scroll point is flexed at order k when its osculating dimension
// is below nk, which is the threshold the block-matrix arguments use.
VerificationReport verify_scroll_properties(const DecomposableScroll& sc, std::size_t sample_budget,
                                           std::uint64_t seed = 1);

}  // namespace oscroll::scrolls
