#pragma once

// Seeded rational sampling shared by the randomized checks. Everything is
// driven by std::mt19937_64 so reports are reproducible for a given seed.

#include <oscroll/rational.hpp>

#include <cstdint>
#include <random>

namespace oscroll::detail {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// num/den with |num| <= num_bound and 1 <= den <= den_bound.
inline exact::Rat random_rat(Rng& rng, long num_bound = 30, long den_bound = 7) {
  exact::Rat q(uniform_int(rng, -num_bound, num_bound), uniform_int(rng, 1, den_bound));
  q.canonicalize();
  return q;
}

inline exact::Rat random_nonzero_rat(Rng& rng, long num_bound = 30, long den_bound = 7) {
  while (true) {
    exact::Rat q = random_rat(rng, num_bound, den_bound);
    if (q != 0) return q;
  }
}

}  // namespace oscroll::detail
