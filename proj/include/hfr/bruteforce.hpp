// hfr/bruteforce.hpp — slow reference enumerations used as oracles
#pragma once

#include <cstddef>

#include "hfr/pmc.hpp"

namespace hfr::brute {

// central strands diagrams by exhaustive strand-subset search; no shared code
// with the algebra's own enumerator
std::size_t central_count(const Pmc& z, bool mult_one_only);
std::size_t symmetric_count(const RealPmc& r, bool mult_one_only);

}  // namespace hfr::brute
