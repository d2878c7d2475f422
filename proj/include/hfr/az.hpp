// hfr/az.hpp — real Auroux-Zarev modules and their reduced models
#pragma once

#include <string>

#include "hfr/astruct.hpp"
#include "hfr/dstruct.hpp"

namespace hfr {

// generator labels: diagram text plus "~" (AZ) or "*" (AZ-bar)
TypeD cfdr_az(const RealPmc& r);
TypeD cfdr_azbar(const RealPmc& r);

// orientable quotient only; generators "[a]" for multiplicity-one a on the half circle
TypeD small_model(const RealPmc& r);
// full-model label of the symmetric diagram a + tau(a) behind "[a]"
std::string small_to_full_label(const RealPmc& r, const std::string& small_label);

struct Mult2Reduction {
    TypeD sub;
    TypeD quotient;
    bool closed = true;
    std::size_t sub_provincial_homology = 0;
};
Mult2Reduction mult2_reduction(const TypeD& full);

// right module over A'(Z) whose underlying space is A'(Z') on the half circle
TypeA cfar_az(const RealPmc& r);
// generators pair each idempotent with tau of its complement
TypeDD cfdd_identity(const RealPmc& r);

bool crosses_midpoint(const Pmc& z, const Diagram& d);

}  // namespace hfr
