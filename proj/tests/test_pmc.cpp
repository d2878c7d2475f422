// test_pmc.cpp — pointed matched circles
#include <doctest.h>

#include "hfr/error.hpp"
#include "hfr/pmc.hpp"

using namespace hfr;

static std::string code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

TEST_SUITE("pmc") {
    TEST_CASE("standard families") {
        CHECK(split_pmc(1).str() == "4;[1-3,2-4]");
        CHECK(split_pmc(2).str() == "8;[1-3,2-4,5-7,6-8]");
        CHECK(antipodal_pmc(2).str() == "8;[1-5,2-6,3-7,4-8]");
        CHECK(split_pmc(1) == antipodal_pmc(1));
        CHECK(parse_pmc("split:3") == split_pmc(3));
        CHECK(parse_pmc("8;[1-3,2-4,5-7,6-8]") == split_pmc(2));
    }

    TEST_CASE("bad circles are rejected") {
        CHECK(code_of([] { Pmc::make(6, {{1, 3}, {2, 4}, {5, 6}}); }) == "BadCount");
        CHECK(code_of([] { Pmc::make(4, {{1, 3}, {1, 4}}); }) == "NotFixedPointFree");
        CHECK(code_of([] { Pmc::make(4, {{1, 2}, {3, 4}}); }) == "NotConnectedAfterSurgery");
        CHECK(code_of([] { parse_pmc("spiral:2"); }) == "ParseError");
    }

    TEST_CASE("real structure and quotients") {
        for (int k = 1; k <= 5; ++k) {
            CHECK(quotient_orientable(realify(split_pmc(k))) == (k % 2 == 0));
            // antipodal:1 is split:1, whose quotient is nonorientable
            CHECK_FALSE(quotient_orientable(realify(antipodal_pmc(k))));
            CHECK(reverse(split_pmc(k)) == split_pmc(k));
        }
        CHECK(code_of([] { realify(Pmc::make(8, {{1, 3}, {2, 7}, {4, 6}, {5, 8}})); }) == "NotSymmetric");
        CHECK(half_pmc(realify(split_pmc(2))) == split_pmc(1));
        CHECK(code_of([] { half_pmc(realify(split_pmc(3))); }) == "NonorientableQuotient");
    }
}
