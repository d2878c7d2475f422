// hfr/astruct.hpp — type A modules, DA and DD bimodules, pairings
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfr/complex.hpp"
#include "hfr/dstruct.hpp"

namespace hfr {

// m_{k+1}(src, inputs...) contains tgt; k = 0 is the internal differential
struct AAction {
    std::uint32_t src = 0;
    std::vector<Diagram> inputs;
    std::uint32_t tgt = 0;
};

struct TypeA {
    Algebra alg;
    std::vector<Gen> gens;
    std::vector<AAction> actions;

    std::uint32_t add_gen(std::string label, Idem idem);
    void add_action(std::uint32_t s, std::vector<Diagram> in, std::uint32_t t);
    void normalize();  // canonical order, duplicates cancelled mod 2
    std::size_t max_inputs() const;
};

// delta^1_{k+1}(src, inputs...) contains out (x) tgt
struct DAEntry {
    std::uint32_t src = 0;
    std::vector<Diagram> inputs;
    Diagram out;
    std::uint32_t tgt = 0;
};

struct DAGen {
    std::string label;
    Idem out_idem = 0;  // idempotent seen by the output algebra
    Idem in_idem = 0;   // idempotent seen by the input algebra
};

struct TypeDA {
    Algebra out_alg, in_alg;
    std::vector<DAGen> gens;
    std::vector<DAEntry> entries;
    void normalize();
    std::size_t max_inputs() const;
};

struct DDGen {
    std::string label;
    Idem left = 0, right = 0;
};

struct DDArrow {
    std::uint32_t src = 0;
    Diagram left, right;
    std::uint32_t tgt = 0;
};

struct TypeDD {
    Algebra left_alg, right_alg;
    std::vector<DDGen> gens;
    std::vector<DDArrow> arrows;
    void normalize();
};

struct AinftyReport {
    bool ok = true;
    std::size_t relations_checked = 0;
    std::string witness;
};

void check_idempotents(const TypeA& m);
AinftyReport check_ainfty(const TypeA& m, std::size_t max_inputs);
bool dd_relation_holds(const TypeDD& dd, std::string* witness = nullptr);

// closes a generating set of actions under merging a trailing input of one
// action with the leading input of the next, up to the given input length
TypeA close_actions(const TypeA& m, std::size_t max_inputs);

TypeA direct_sum(const TypeA& a, const TypeA& b, const std::string& pa = "", const std::string& pb = "");

ChainComplex box_AD(const TypeA& m, const TypeD& d);
TypeD box_DA_D(const TypeDA& b, const TypeD& d);
TypeD box_A_DD(const TypeA& m, const TypeDD& dd);
ChainComplex mor_to_d(const TypeD& d1, const TypeD& d2);

TypeDA identity_da(const Algebra& alg);

}  // namespace hfr
