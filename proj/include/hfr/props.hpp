// hfr/props.hpp — randomized structures for property checks
#pragma once

#include <random>

#include "hfr/dstruct.hpp"

namespace hfr {

// generator x replaced by x + y (equal idempotents); the result is isomorphic
TypeD change_basis(const TypeD& d, std::uint32_t x, std::uint32_t y);

// bounded torus-algebra structure: sum of bounded fixtures and cancelling
// pairs, scrambled by random basis changes; at most max_gens generators
TypeD random_bounded_structure(std::mt19937_64& rng, std::size_t max_gens);

}  // namespace hfr
