// test_dstruct.cpp — type D structures: checks, boundedness, cancellation
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "hfr/error.hpp"
#include "hfr/props.hpp"
#include "hfr/satellites.hpp"

using namespace hfr;

TEST_SUITE("dstruct") {
    TEST_CASE("idempotent mismatch is named") {
        TypeD d;
        d.alg = torus_algebra();
        auto a = d.add_gen("a", iota_idem(0));
        auto b = d.add_gen("b", iota_idem(0));
        d.add_arrow(a, rho("1"), b);
        try {
            check_idempotents(d);
            FAIL("expected a throw");
        } catch (const Error& e) {
            CHECK(e.code == "IdempotentMismatch");
        }
    }

    TEST_CASE("a failing relation leaves residuals") {
        TypeD d;
        d.alg = torus_algebra();
        auto a = d.add_gen("a", iota_idem(0));
        auto b = d.add_gen("b", iota_idem(1));
        auto c = d.add_gen("c", iota_idem(0));
        d.add_arrow(a, rho("1"), b);
        d.add_arrow(b, rho("2"), c);
        auto rep = check_structure_relation(d);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.residuals.size() == 1);
        CHECK(rep.residuals[0].coef == rho("12"));
    }

    TEST_CASE("boundedness and the cap") {
        CHECK(bounded_depth(thick_torus_cfdr()) == -1);
        CHECK_FALSE(is_bounded(thick_torus_cfdr()));
        CHECK(bounded_depth(staircase_typeD(2)) > 0);
        CHECK(is_bounded(staircase_typeD(2)));
        CHECK_THROWS_AS(is_bounded(staircase_typeD(3), 2), Error);
        setenv("HFR_MAX_BOUND_CAP", "3", 1);
        CHECK(default_bound_cap() == 3);
        unsetenv("HFR_MAX_BOUND_CAP");
        CHECK(default_bound_cap() == 64);
    }

    TEST_CASE("components and sums") {
        CHECK(idempotent_components(thick_torus_cfdr()).size() == 2);
        auto s = direct_sum(box_typeD(), whitehead_cfdr_framed(), "b.", "w.");
        CHECK(s.gens.size() == 11);
        CHECK(check_structure_relation(s).ok);
        CHECK(idempotent_components(s).size() >= 2);
    }

    TEST_CASE("simplify cancels a pair and keeps homology") {
        auto d = direct_sum(whitehead_cfdr_unframed(), cable21_cfdr_framed());
        auto pre = homology_dim(provincial_complex(d));
        TypeD e = d;
        auto x = e.add_gen("x", iota_idem(1));
        auto y = e.add_gen("y", iota_idem(1));
        e.add_arrow(x, iota(1), y);
        auto s = simplify(e);
        CHECK(s.gens.size() == d.gens.size());
        CHECK(homology_dim(provincial_complex(s)) == pre);
    }

    TEST_CASE("random bounded structures") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 300; ++i) {
            TypeD d = random_bounded_structure(rng, 60);
            REQUIRE(check_structure_relation(d).ok);
            REQUIRE(bounded_depth(d) >= 0);
            TypeD s = simplify(d);
            CHECK(check_structure_relation(s).ok);
            CHECK(homology_dim(provincial_complex(s)) == homology_dim(provincial_complex(d)));
            for (const auto& a : s.arrows) CHECK_FALSE(a.coef.is_idempotent());
        }
    }

    TEST_CASE("basis change is reversible") {
        TypeD d = box_typeD();
        auto b00 = static_cast<std::uint32_t>(d.find("b00")), b22 = static_cast<std::uint32_t>(d.find("b22"));
        TypeD e = change_basis(d, b00, b22);
        CHECK(check_structure_relation(e).ok);
        TypeD back = change_basis(e, b00, b22);
        CHECK(same_structure(back, d, [](const std::string& l) { return l; }));
    }
}
