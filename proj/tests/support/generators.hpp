// Seeded random data for the property suites.  Everything routes
// through the public arithmetic so generated values are canonical by
// construction.

#pragma once

#include <cstdint>
#include <random>

#include "translim/ordinal.hpp"

namespace testsupport {

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

// Random ordinal with exponent nesting up to `depth`, at most
// `max_terms` summands per level, coefficients in [1, max_coeff].
// May return zero.
inline translim::Ordinal random_ordinal(std::mt19937_64& rng, unsigned depth = 3,
                                        unsigned max_terms = 3,
                                        unsigned max_coeff = 9) {
  using namespace translim;
  const std::uint64_t terms = bounded(rng, max_terms + 1);
  Ordinal acc;
  for (std::uint64_t t = 0; t < terms; ++t) {
    const Ordinal exponent =
        depth == 0
            ? from_natural(static_cast<unsigned long>(bounded(rng, 3)))
            : random_ordinal(rng, depth - 1, max_terms, max_coeff);
    const unsigned long coeff = 1 + static_cast<unsigned long>(bounded(rng, max_coeff));
    acc = add(acc, multiply(power_of_omega(exponent), from_natural(coeff)));
  }
  return acc;
}

}  // namespace testsupport
