#pragma once

#include "dlo/piecewise.hpp"

#include <random>

namespace dlo {

enum class MapKind { any, injective, surjective, automorphism, constant };

// p/q with |p| <= height and 1 <= q <= height.
Rat random_rat(std::mt19937_64& rng, int height = 10);

// Random canonical piecewise map of the requested kind with at most
// max_pieces affine pieces (point pieces at breakpoints not counted).
PiecewiseEndo random_piecewise(std::mt19937_64& rng, MapKind kind, int max_pieces = 5, int height = 10);

}  // namespace dlo
