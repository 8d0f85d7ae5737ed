#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace oscroll::exact {

using BigInt = mpz_class;

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation, which is exactly the Rat contract.
using Rat = mpq_class;

// Accepts "-12", "3/4", "-7/21" (reduced on the way in). No whitespace, no
// decimal points, no zero denominators.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);

// Least common multiple of the denominators of a run of rationals.
BigInt denominator_lcm(const Rat* first, const Rat* last);

}  // namespace oscroll::exact
