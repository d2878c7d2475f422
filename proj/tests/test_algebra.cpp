// test_algebra.cpp — strands algebra identities against exhaustive checks
#include <doctest.h>

#include <random>

#include "hfr/algebra.hpp"
#include "hfr/bruteforce.hpp"

using namespace hfr;

namespace {

Element mul(const Algebra& a, const Diagram& x, const Diagram& y) {
    Element e;
    if (auto p = a.mul(x, y)) e.add(*p);
    return e;
}

Element mul(const Algebra& a, const Element& x, const Diagram& y) { return a.mul(x, Element(y)); }
Element mul(const Algebra& a, const Diagram& x, const Element& y) { return a.mul(Element(x), y); }

}  // namespace

TEST_SUITE("algebra") {
    TEST_CASE("central counts match exhaustive enumeration") {
        struct Row {
            const char* pmc;
            std::size_t central;
        };
        for (Row r : {Row{"split:1", 8}, Row{"split:2", 238}, Row{"antipodal:2", 274}}) {
            Pmc z = parse_pmc(r.pmc);
            CAPTURE(r.pmc);
            CHECK(brute::central_count(z, false) == r.central);
            CHECK(enumerate_generators(z).size() == r.central);
            CHECK(Algebra(z, true).basis().size() == brute::central_count(z, true));
        }
        CHECK(brute::central_count(split_pmc(3), false) == enumerate_generators(split_pmc(3)).size());
    }

    TEST_CASE("symmetric counts match exhaustive enumeration") {
        struct Row {
            const char* pmc;
            std::size_t sym;
        };
        for (Row r : {Row{"split:1", 2}, Row{"split:2", 16}, Row{"antipodal:2", 18}, Row{"split:3", 108}, Row{"antipodal:3", 140}}) {
            RealPmc z = realify(parse_pmc(r.pmc));
            CAPTURE(r.pmc);
            CHECK(brute::symmetric_count(z, false) == r.sym);
            CHECK(symmetric_generators(z).size() == r.sym);
        }
    }

    TEST_CASE("d squared, Leibniz and associativity at genus 2") {
        for (const char* name : {"split:2", "antipodal:2"}) {
            Algebra a(parse_pmc(name));
            auto basis = enumerate_generators(a.pmc());
            CAPTURE(name);
            for (const auto& x : basis) CHECK(a.d(a.d(x)).empty());
            std::size_t nonzero = 0;
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    auto p = mul(a, x, y);
                    if (!p.empty()) ++nonzero;
                    Element rhs = mul(a, a.d(x), y);
                    rhs += mul(a, x, a.d(y));
                    if (!(a.d(p) == rhs)) {
                        FAIL_CHECK("Leibniz fails for " << a.str(x) << " * " << a.str(y));
                    }
                }
            CHECK(nonzero > basis.size());
            std::mt19937_64 rng(7);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            for (int i = 0; i < 20000; ++i) {
                const auto &x = basis[pick(rng)], &y = basis[pick(rng)], &z = basis[pick(rng)];
                CHECK(mul(a, mul(a, x, y), z) == mul(a, x, mul(a, y, z)));
            }
        }
    }

    TEST_CASE("reflection reverses products") {
        RealPmc r = realify(split_pmc(2));
        Algebra a(r.pmc());
        auto basis = enumerate_generators(a.pmc());
        for (const auto& x : basis)
            for (const auto& y : basis) {
                auto p = a.mul(x, y);
                auto q = a.mul(tau_act(r, y), tau_act(r, x));
                REQUIRE(p.has_value() == q.has_value());
                if (p) CHECK(tau_act(r, *p) == *q);
            }
    }

    TEST_CASE("multiplicity two spans a differential ideal") {
        Algebra a(antipodal_pmc(2));
        auto basis = enumerate_generators(a.pmc());
        for (const auto& x : basis) {
            if (multiplicity_one(x)) continue;
            for (const auto& t : a.d(x).terms()) CHECK_FALSE(multiplicity_one(t));
            for (const auto& y : basis) {
                if (auto p = a.mul(x, y)) CHECK_FALSE(multiplicity_one(*p));
                if (auto p = a.mul(y, x)) CHECK_FALSE(multiplicity_one(*p));
            }
        }
        Algebra q(antipodal_pmc(2), true);
        for (const auto& x : q.basis()) CHECK(q.d(q.d(x)).empty());
    }

    TEST_CASE("torus names") {
        const Algebra& t = torus_algebra();
        CHECK(t.name(rho("123")) == "ρ123");
        CHECK(t.name(iota(1)) == "ι1");
        CHECK(t.parse("ρ12") == rho("12"));
        CHECK(t.mul(rho("1"), rho("2")) == rho("12"));
        CHECK_FALSE(t.mul(rho("2"), rho("1")).has_value());
        CHECK(t.d(rho("123")).empty());
    }
}
