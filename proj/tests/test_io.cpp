// test_io.cpp — interchange documents
#include <doctest.h>

#include <json.hpp>

#include "hfr/az.hpp"
#include "hfr/error.hpp"
#include "hfr/io.hpp"
#include "hfr/satellites.hpp"

using namespace hfr;

namespace {

std::string error_text(const std::string& doc) {
    try {
        io::load(doc);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

// hand-written in the interchange format, as an external tool would produce it
const char* kSyntheticDA = R"({
  "format": "hfr-interchange/1",
  "kind": "type_da",
  "input_algebra": {"multiplicity_one": false, "pmc": {"n": 4, "pairs": [[1, 3], [2, 4]]}},
  "output_algebra": {"multiplicity_one": false, "pmc": {"n": 4, "pairs": [[1, 3], [2, 4]]}},
  "generators": [
    {"label": "i0", "input_idempotent": [1], "output_idempotent": [1]},
    {"label": "i1", "input_idempotent": [2], "output_idempotent": [2]}
  ],
  "entries": [
    ["i0", ["{[1,2]}"], "{[1,2]}", "i1"],
    ["i1", ["{[2,3]}"], "{[2,3]}", "i0"],
    ["i0", ["{[3,4]}"], "{[3,4]}", "i1"],
    ["i0", ["{[1,3]}"], "{[1,3]}", "i0"],
    ["i1", ["{[2,4]}"], "{[2,4]}", "i1"],
    ["i0", ["{[1,4]}"], "{[1,4]}", "i1"]
  ]
})";

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("round trips are byte identical") {
        std::vector<io::Document> docs = {split_pmc(2),
                                          cfdr_az(realify(split_pmc(2))),
                                          staircase_typeA(-2),
                                          identity_da(torus_algebra()),
                                          cfdd_identity(realify(split_pmc(2))),
                                          box_AD(box_typeA(), whitehead_cfdr_framed())};
        for (const auto& f : type_d_fixtures()) docs.push_back(f.build());
        for (const auto& d : docs) {
            std::string a = io::dump(d);
            CHECK(a == io::dump(d));
            CHECK(io::dump(io::load(a)) == a);
        }
    }

    TEST_CASE("genus-1 document has one arrow record") {
        auto j = nlohmann::json::parse(io::dump(cfdr_az(realify(split_pmc(1)))));
        CHECK(j["kind"] == "type_d");
        CHECK(j["format"] == "hfr-interchange/1");
        CHECK(j["arrows"].size() == 1);
        CHECK(j["generators"].size() == 2);
    }

    TEST_CASE("loaded fixtures still satisfy the relation") {
        for (const auto& f : type_d_fixtures()) {
            auto doc = io::load(io::dump(f.build()));
            CHECK(check_structure_relation(std::get<TypeD>(doc)).ok);
        }
    }

    TEST_CASE("malformed documents") {
        std::string good = io::dump(whitehead_cfdr_framed());
        CHECK(error_text(good.substr(0, good.size() / 2)).rfind("ParseError", 0) == 0);
        CHECK(error_text("{\"format\": \"other\"}").rfind("ParseError", 0) == 0);

        auto j = nlohmann::json::parse(good);
        j["arrows"][0][1] = "{[2,3]}";  // starts in the wrong idempotent
        auto msg = error_text(j.dump());
        CHECK(msg.rfind("ValidationError", 0) == 0);
        CHECK(msg.find("IdempotentMismatch") != std::string::npos);

        auto k = nlohmann::json::parse(io::dump(cable21_cfdr_unframed()));
        k["arrows"].push_back({"p", "{[2,3]}", "p", ""});
        CHECK(error_text(k.dump()).find("IdempotentMismatch") != std::string::npos);

        auto dup = nlohmann::json::parse(good);
        dup["generators"][1]["label"] = "r";
        CHECK(error_text(dup.dump()).find("DuplicateLabel") != std::string::npos);

        auto rel = nlohmann::json::parse(io::dump(cable21_cfdr_framed()));
        rel["generators"].push_back({{"label", "z"}, {"idempotent", {1}}});
        rel["arrows"].push_back({"y", "{[1,2]}", "x", ""});
        rel["arrows"].push_back({"x", "{[2,3]}", "z", ""});
        CHECK(error_text(rel.dump()).find("StructureRelation") != std::string::npos);

        ChainComplex c;
        c.basis = {"a", "b", "c"};
        c.boundary.assign(3, {});
        c.add_arrow(0, 1);
        c.add_arrow(1, 2);
        CHECK(error_text(io::dump(c)).find("DSquaredNonzero") != std::string::npos);
    }

    TEST_CASE("an externally written DA bimodule loads and tensors") {
        auto doc = io::load(kSyntheticDA);
        auto& da = std::get<TypeDA>(doc);
        CHECK(da.gens.size() == 2);
        for (const auto& f : type_d_fixtures()) {
            TypeD d = f.build();
            TypeD out = box_DA_D(da, d);
            CHECK(check_structure_relation(out).ok);
            CHECK(same_structure(out, d, [](const std::string& l) { return l.substr(l.find("⊗") + std::string("⊗").size()); }));
        }
    }

    TEST_CASE("save reports sink failures") {
        std::ostringstream os;
        os.setstate(std::ios::badbit);
        CHECK_THROWS_AS(io::save(split_pmc(1), os), Error);
        CHECK_THROWS_AS(io::save_file(split_pmc(1), "/nonexistent-dir/x.hfr.json"), Error);
    }
}
