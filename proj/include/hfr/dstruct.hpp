// hfr/dstruct.hpp — type D structures over a strands algebra
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hfr/algebra.hpp"
#include "hfr/complex.hpp"

namespace hfr {

struct Gen {
    std::string label;
    Idem idem = 0;
};

// x -> coef (x) y, with lidem(coef) = idem(x) and ridem(coef) = idem(y)
struct DArrow {
    std::uint32_t src = 0;
    Diagram coef;
    std::uint32_t tgt = 0;
    std::string tag;  // rule provenance, may be empty
};

struct TypeD {
    Algebra alg;
    std::vector<Gen> gens;
    std::vector<DArrow> arrows;

    std::uint32_t add_gen(std::string label, Idem idem);
    void add_arrow(std::uint32_t s, const Diagram& c, std::uint32_t t, std::string tag = {});
    // sort arrows canonically and cancel duplicate (src, coef, tgt) pairs mod 2
    void normalize();
    std::int64_t find(const std::string& label) const;
    std::vector<std::vector<std::uint32_t>> out_arrows() const;  // arrow indices by source
};

struct Residual {
    std::uint32_t gen;
    Diagram coef;
    std::uint32_t tgt;
};

struct RelationReport {
    bool ok = true;
    std::vector<Residual> residuals;
};

void check_idempotents(const TypeD& d);  // throws IdempotentMismatch
RelationReport check_structure_relation(const TypeD& d);

// longest composable chain length; throws CapExceeded at cap
bool is_bounded(const TypeD& d, int cap = 64);
int bounded_depth(const TypeD& d);  // -1 when a cycle exists
int default_bound_cap();            // HFR_MAX_BOUND_CAP or 64

TypeD simplify(const TypeD& d);
ChainComplex provincial_complex(const TypeD& d);

struct SubResult {
    TypeD part;
    bool closed = true;
    std::size_t leaving = 0;  // arrows from the subset to its complement
};
SubResult span_substructure(const TypeD& d, const std::function<bool(std::uint32_t)>& in_subset,
                            bool require_closed = false);
TypeD quotient_structure(const TypeD& d, const std::function<bool(std::uint32_t)>& in_subset);
std::vector<std::vector<std::uint32_t>> idempotent_components(const TypeD& d);

TypeD direct_sum(const TypeD& a, const TypeD& b, const std::string& prefix_a = "", const std::string& prefix_b = "");

// arrow-for-arrow equality after relabelling a's generators through `rename`
bool same_structure(const TypeD& a, const TypeD& b, const std::function<std::string(const std::string&)>& rename);

std::string describe(const TypeD& d);

}  // namespace hfr
