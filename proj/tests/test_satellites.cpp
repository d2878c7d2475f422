// test_satellites.cpp — pattern modules, summands and closed forms
#include <doctest.h>

#include "hfr/error.hpp"
#include "hfr/satellites.hpp"

using namespace hfr;

TEST_SUITE("satellites") {
    TEST_CASE("fixture shapes") {
        CHECK(whitehead_cfdr_framed().gens.size() == 3);
        CHECK(whitehead_cfdr_framed().arrows.size() == 1);
        CHECK(whitehead_cfdr_unframed().gens.size() == 5);
        CHECK(whitehead_cfdr_unframed().arrows.size() == 3);
        CHECK(cable21_cfdr_framed().gens.size() == 2);
        CHECK(cable21_cfdr_unframed().arrows.size() == 2);
        CHECK(staircase_typeD(0).gens.size() == 1);
        for (int t = -3; t <= 3; ++t) {
            if (t == 0) continue;
            auto d = staircase_typeD(t);
            std::size_t solid = 0;
            for (const auto& g : d.gens) solid += g.idem == iota_idem(0);
            CHECK(solid == 2 * std::abs(t) + 1);
            CHECK(d.gens.size() - solid == 4 * std::abs(t));
        }
        for (const auto& f : type_d_fixtures()) {
            CAPTURE(f.name);
            CHECK(check_structure_relation(f.build()).ok);
        }
    }

    TEST_CASE("type A modules satisfy the A-infinity relations") {
        for (int t = -2; t <= 2; ++t) {
            TypeA m = staircase_typeA(t);
            CAPTURE(t);
            check_idempotents(m);
            CHECK(check_ainfty(m, m.max_inputs()).ok);
        }
        TypeA b = box_typeA();
        CHECK(check_ainfty(b, b.max_inputs()).ok);
        TypeA z = staircase_typeA(0);
        bool self = false;
        for (const auto& a : z.actions)
            if (a.inputs == std::vector<Diagram>{rho("3"), rho("2")} && a.src == a.tgt) self = true;
        CHECK(self);
    }

    TEST_CASE("per-summand contributions") {
        auto wh = whitehead_cfdr_framed(), cb = cable21_cfdr_framed();
        for (int t = -3; t <= 3; ++t) {
            TypeA m = staircase_typeA(t);
            int a = std::abs(t);
            std::size_t w = t > 0 ? 8 * a - 1 : (t < 0 ? 8 * a + 1 : 1);
            std::size_t c = t > 0 ? 4 * a + 1 : (t < 0 ? 4 * a - 1 : 1);
            CAPTURE(t);
            CHECK(homology_dim(box_AD(m, wh)) == w);
            CHECK(homology_dim(box_AD(m, cb)) == c);
        }
    }

    TEST_CASE("box tensor distributes over sums") {
        TypeA sum = direct_sum(direct_sum(staircase_typeA(2), box_typeA(), "s.", "b."), box_typeA(), "", "c.");
        for (const auto& d : {whitehead_cfdr_framed(), cable21_cfdr_framed(), whitehead_cfdr_unframed()}) {
            std::size_t parts = homology_dim(box_AD(staircase_typeA(2), d)) + 2 * homology_dim(box_AD(box_typeA(), d));
            CHECK(homology_dim(box_AD(sum, d)) == parts);
        }
    }

    TEST_CASE("pipeline examples and oracles") {
        CHECK(hfr_satellite_dim(Pattern::Whitehead, {1, 0}) == 1);
        CHECK(hfr_satellite_dim(Pattern::Whitehead, {3, 1}) == 7);
        CHECK(hfr_satellite_dim(Pattern::Cable21, {5, 0}) == 5);
        CHECK(oracle_hf_whitehead({3, 1}) == 15);
        CHECK(oracle_hfr_whitehead({1, 0}) == 1);
        CHECK(oracle_hfr_cable({3, 1}) == 5);
        CHECK(oracle_hf_surgery_one({1, 0}) == 1);
        CHECK(oracle_hf_surgery_one({3, 1}) == 1);
        CHECK(oracle_hf_surgery_half({5, 0}) == 5);
        CHECK(oracle_hf_cable({1, 0}) == 1);
        CHECK_THROWS_AS(hfr_satellite_dim(Pattern::Whitehead, {4, 0}), Error);
        CHECK_THROWS_AS(oracle_hfr_cable({3, 0}), Error);
        CHECK(AlternatingKnotData{9, 2}.box_count() == 1);
    }

    TEST_CASE("cable closed form is the one-surgery formula at det squared, twice tau") {
        for (int det = 1; det <= 13; det += 2)
            for (int tau = -3; tau <= 3; ++tau) {
                AlternatingKnotData k{det, tau};
                if (!k.valid()) continue;
                AlternatingKnotData sq{det * det, 2 * tau};
                if (sq.valid()) CHECK(oracle_hf_cable(k) == oracle_hf_surgery_one(sq));
            }
    }
}
