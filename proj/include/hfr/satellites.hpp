// hfr/satellites.hpp — pattern modules, alternating-knot summands, closed forms
#pragma once

#include <string>

#include "hfr/astruct.hpp"
#include "hfr/dstruct.hpp"

namespace hfr {

struct AlternatingKnotData {
    int det = 1;
    int tau = 0;
    bool valid() const;
    void require_valid() const;  // throws InvariantViolation
    int box_count() const;       // (det - (2|tau|+1)) / 4
};

TypeD thick_torus_cfdr();
TypeD whitehead_cfdr_framed();
TypeD whitehead_cfdr_unframed();
TypeD cable21_cfdr_framed();
TypeD cable21_cfdr_unframed();

TypeD staircase_typeD(int tau);
TypeD box_typeD();
TypeA staircase_typeA(int tau);
TypeA box_typeA();

// torus-algebra type D to type A: letters 1 <-> 3, sequences for the long chords,
// then products of adjacent letters folded in
TypeA typeA_from_typeD(const TypeD& d, std::size_t max_inputs);

enum class Pattern { Whitehead, Cable21 };
Pattern parse_pattern(const std::string& s);
const char* pattern_name(Pattern p);
TypeD framed_pattern(Pattern p);

std::size_t hfr_satellite_dim(Pattern p, const AlternatingKnotData& k);

std::size_t oracle_hfr_whitehead(const AlternatingKnotData& k);
std::size_t oracle_hf_whitehead(const AlternatingKnotData& k);
std::size_t oracle_hfr_cable(const AlternatingKnotData& k);
std::size_t oracle_hf_cable(const AlternatingKnotData& k);
std::size_t oracle_hf_surgery_one(const AlternatingKnotData& k);
std::size_t oracle_hf_surgery_half(const AlternatingKnotData& k);

// name -> builder for `hfr fixtures`
struct Fixture {
    std::string name;
    TypeD (*build)();
};
const std::vector<Fixture>& type_d_fixtures();

}  // namespace hfr
