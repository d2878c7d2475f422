// hfr/algebra.hpp — strands algebra A(Z) in the central summand, and A'(Z)
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfr/pmc.hpp"

namespace hfr {

using Mask = std::uint64_t;  // bit p <-> point p
using Idem = Mask;           // occupied pairs, each named by its lower point

inline Mask bit(int p) { return Mask{1} << p; }

struct Diagram {
    static constexpr int kCap = 16;
    using Strand = std::pair<std::uint8_t, std::uint8_t>;

    std::uint8_t nm = 0;
    std::array<Strand, kCap> mov{};  // moving strands sorted by start
    Mask hor = 0;                    // horizontal points, closed under the matching

    const Strand* begin() const { return mov.data(); }
    const Strand* end() const { return mov.data() + nm; }
    void push(int s, int t);
    void canonicalize();  // sort the moving strands
    bool is_idempotent() const { return nm == 0; }

    bool operator==(const Diagram& o) const;
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const;
};

struct DiagramHash {
    std::size_t operator()(const Diagram& d) const;
};

// F2 sum of basis diagrams, kept sorted and duplicate free.
class Element {
public:
    Element() = default;
    explicit Element(const Diagram& d) : terms_{d} {}
    const std::vector<Diagram>& terms() const& { return terms_; }
    std::vector<Diagram> terms() && { return std::move(terms_); }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add(const Diagram& d);  // toggles membership
    Element& operator+=(const Element& o);
    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    std::vector<Diagram> terms_;
};

class Algebra {
public:
    Algebra() = default;
    explicit Algebra(Pmc z, bool mult_one = false) : z_(std::move(z)), mult_one_(mult_one) {}

    const Pmc& pmc() const { return z_; }
    bool mult_one() const { return mult_one_; }

    bool valid(const Diagram& d) const;          // strands-diagram invariants
    bool central(const Diagram& d) const;        // valid and k occupied pairs
    Idem lidem(const Diagram& d) const;
    Idem ridem(const Diagram& d) const;
    Idem complement(Idem i) const;
    Diagram idempotent(Idem i) const;
    std::vector<Idem> idempotents() const;       // all k-element subsets of pairs

    std::optional<Diagram> mul(const Diagram& a, const Diagram& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element d(const Diagram& a) const;
    Element d(const Element& a) const;

    // single chord [s,t] whose horizontals fill the rest of idempotent i
    std::optional<Diagram> chord(Idem i, int s, int t) const;

    // every central basis diagram (multiplicity one only, for A')
    std::vector<Diagram> basis() const;

    std::string str(const Diagram& d) const;  // "{[1,2],[6,6],[8,8]}"
    std::string name(const Diagram& d) const; // torus letters at genus 1
    std::string idem_str(Idem i) const;       // "{1-3,6-8}"
    Diagram parse(const std::string& s) const;

    bool operator==(const Algebra& o) const { return z_ == o.z_ && mult_one_ == o.mult_one_; }

private:
    Pmc z_;
    bool mult_one_ = false;
};

int crossings(const std::vector<std::pair<int, int>>& strands);
std::vector<int> multiplicity_vector(const Pmc& z, const Diagram& d);
bool multiplicity_one(const Diagram& d);

Diagram tau_act(const RealPmc& r, const Diagram& d);
bool is_symmetric(const RealPmc& r, const Diagram& d);
Idem tau_idem(const Pmc& z, Idem i);
std::vector<Diagram> enumerate_generators(const Pmc& z);
std::vector<Diagram> symmetric_generators(const RealPmc& r);
Idem complement_idempotent(const Pmc& z, Idem i);

// reflection anti-isomorphism A(Z') -> A(-Z'), relabelling i -> n+1-i
Diagram mirror_antihom(const Pmc& half, const Diagram& d);

// torus algebra on split:1: rho("1"), rho("23"), ..., and iota(0) / iota(1)
const Algebra& torus_algebra();
Diagram rho(const std::string& digits);
Diagram iota(int which);
Idem iota_idem(int which);

}  // namespace hfr
