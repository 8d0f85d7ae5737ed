#pragma once

#include <oscroll/scroll.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oscroll::constructions {

using curves::RationalCurve;
using exact::LinearSubspace;
using scrolls::DecomposableScroll;

// Forms t0^(d-j) t1^j, j = 0..d. Requires d >= 1.
RationalCurve rational_normal_curve(int d);

// Forms t0^(degree-e) t1^e. Exponents must be distinct, lie in [0, degree],
// include 0 and degree, and number at least two. Throws InputError on
// violations and MathError if the result is not an embedded curve.
RationalCurve monomial_curve(std::vector<int> exponents, int degree);

// Scroll of rational normal curves of the given degrees (each >= 1).
DecomposableScroll rational_normal_scroll(const std::vector<int>& rs);

// Random subspace of the given dimension meeting no m-th osculating space
// of c. Integer coordinates; bounded retries, then MathError.
LinearSubspace center_off_developable(const RationalCurve& c, std::size_t m, std::size_t center_dim,
                                      std::uint64_t seed);

// Random rational point of Osc^m_{t*}(c) at a random rational t*, with a
// nonzero coefficient on the m-th jet row. Returns the point and t*.
std::pair<LinearSubspace, exact::Rat> point_on_developable(const RationalCurve& c, std::size_t m, std::uint64_t seed);

// Where an expected value comes from: a value stated for the construction
// in the source material, a trivial fact, or an independent derivation.
enum class Provenance { stated, trivial, derived };
std::string to_string(Provenance p);  // "STATED", "TRIVIAL", "DERIVED"

struct Outcome {
  std::string actual;
  bool pass = false;
};

struct Expectation {
  std::string operation;
  std::string arguments;
  std::string expected;
  Provenance provenance = Provenance::derived;
  std::function<Outcome()> check;
};

struct Scenario {
  std::string id;
  std::map<std::string, std::string> parameters;  // includes the seed
  DecomposableScroll scroll;
  std::vector<Expectation> expectations;
};

struct ScenarioParams {
  std::map<std::string, long> values;  // r1, r2, k, r, m, d
  std::uint64_t seed = 1;
};

const std::vector<std::string>& scenario_ids();

// Throws InputError on an unknown id or invalid parameters and MathError when
// center sampling exhausts its retries.
Scenario scenario(const std::string& id, const ScenarioParams& params);

}  // namespace oscroll::constructions
