#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "frechet/geometry.hpp"

namespace frechet {

// Random walk from the origin with i.i.d. uniform steps in [-1, 1] per
// coordinate. Deterministic for a given engine state.
PolyCurve random_walk(std::size_t n, std::size_t dim, std::mt19937_64& rng);
PolyCurve random_walk(std::size_t n, std::size_t dim, std::uint64_t seed);

}  // namespace frechet
