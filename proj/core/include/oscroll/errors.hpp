#pragma once

#include <stdexcept>
#include <string>

namespace oscroll {

// Raised when an input violates a mathematical requirement (a center meeting
// the curve, a degenerate parametrization, an oracle disagreeing with a
// closed formula). The CLI maps it to exit code 2.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed files, unknown ids, bad flags. The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscroll
