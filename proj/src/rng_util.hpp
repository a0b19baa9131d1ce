#pragma once

#include <cstdint>
#include <random>

namespace translim::detail {

// Uniform draw from [0, n).  mt19937_64 output is fully specified by
// the standard, so seeded results are identical across platforms
// (std::uniform_int_distribution is not).
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

}  // namespace translim::detail
