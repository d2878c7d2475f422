// reproduce.cpp — acceptance checks shared by the test binary and `hfr reproduce`
#include "hfr/reproduce.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "hfr/az.hpp"
#include "hfr/bruteforce.hpp"
#include "hfr/error.hpp"
#include "hfr/io.hpp"
#include "hfr/props.hpp"
#include "hfr/satellites.hpp"

namespace hfr {

namespace {

struct Collector {
    std::vector<std::string> bad;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    }
    CheckResult finish(int id, const std::string& title) const {
        CheckResult r{id, title, bad.empty(), {}};
        std::ostringstream os;
        const auto& v = bad.empty() ? notes : bad;
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "; " : "") << v[i];
        r.detail = os.str();
        return r;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Gen* gen_named(const TypeD& d, const std::string& label) {
    auto i = d.find(label);
    return i < 0 ? nullptr : &d.gens[static_cast<std::size_t>(i)];
}

CheckResult genus_one(int id, bool bar) {
    Collector c;
    auto t0 = std::chrono::steady_clock::now();
    TypeD d = bar ? cfdr_azbar(realify(split_pmc(1))) : cfdr_az(realify(split_pmc(1)));
    double secs = seconds_since(t0);
    const char* suf = bar ? "*" : "~";
    std::string a = std::string("ρ2") + suf, b = std::string("ρ123") + suf;
    c.expect(d.gens.size() == 2, "expected 2 generators");
    const Gen* ga = gen_named(d, a);
    const Gen* gb = gen_named(d, b);
    c.expect(ga && gb, "generator labels");
    if (ga && gb) {
        c.expect(ga->idem == iota_idem(bar ? 1 : 0), a + " idempotent");
        c.expect(gb->idem == iota_idem(bar ? 0 : 1), b + " idempotent");
    }
    c.expect(d.arrows.size() == 1, "expected exactly one arrow");
    if (d.arrows.size() == 1) {
        const auto& x = d.arrows[0];
        std::string src = bar ? b : a, tgt = bar ? a : b;
        c.expect(d.gens[x.src].label == src && d.gens[x.tgt].label == tgt && x.coef == rho(bar ? "3" : "1"), "arrow");
    }
    c.expect(secs < 1.0, "runtime over 1 s");
    c.notes.push_back(bar ? "ρ123* —ρ3→ ρ2*, idempotents ι0/ι1 as stated, under 1 s"
                          : "ρ2~ —ρ1→ ρ123~, idempotents ι0/ι1 as stated, under 1 s");
    return c.finish(id, bar ? "genus-1 AZ-bar module" : "genus-1 AZ module");
}

CheckResult relations() {
    Collector c;
    for (const char* name : {"split:1", "split:2", "antipodal:2", "split:3", "antipodal:3"}) {
        RealPmc r = realify(parse_pmc(name));
        for (int bar = 0; bar < 2; ++bar) {
            TypeD d = bar ? cfdr_azbar(r) : cfdr_az(r);
            auto rep = check_structure_relation(d);
            c.expect(rep.ok, std::string(name) + (bar ? " azbar" : " az") + " relation fails");
        }
        c.notes.push_back(std::string(name));
    }
    auto r = c.finish(3, "structure relation for AZ and AZ-bar");
    if (r.pass) r.detail = "both sides hold on " + r.detail;
    return r;
}

CheckResult worked_genus_two() {
    Collector c;
    TypeD d = cfdr_az(realify(split_pmc(2)));
    using T = std::tuple<std::string, std::string, std::string>;
    std::multiset<T> want = {
        {"{[1,1],[3,3],[6,7]}", "{[2,3],[6,7]}~", "vi"},  {"{[3,7],[6,6],[8,8]}", "{[2,6],[3,7]}~", "vi"},
        {"{[1,2],[6,6],[8,8]}", "{[1,2],[7,8]}~", "vii"}, {"{[1,4],[6,6],[8,8]}", "{[1,4],[5,8]}~", "vii"},
        {"{[3,4],[6,6],[8,8]}", "{[3,4],[5,6]}~", "vii"}, {"{[1,7],[6,6],[8,8]}", "{[1,8],[2,7]}~", "ix"},
        {"{[3,5],[6,6],[8,8]}", "{[3,6],[4,5]}~", "ix"},  {"{[1,5],[6,6],[8,8]}", "{[1,8],[4,5]}~", "ix"},
    };
    auto got = [&](const std::string& label) {
        std::multiset<T> out;
        auto i = d.find(label);
        if (i < 0) return out;
        for (const auto& a : d.arrows)
            if (a.src == static_cast<std::uint32_t>(i)) out.insert({d.alg.str(a.coef), d.gens[a.tgt].label, a.tag});
        return out;
    };
    c.expect(got("{[2,2],[4,4],[5,5],[7,7]}~") == want, "eight-term differential differs");
    auto second = got("{[3,6],[4,5]}~");
    c.expect(second.size() == 1 && std::get<0>(*second.begin()) == "{[5,5],[6,6],[7,7],[8,8]}" &&
                 std::get<1>(*second.begin()) == "{[3,5],[4,6]}~",
             "differential of {[3,6],[4,5]}~");
    c.notes.push_back("8 terms with tags vi x2, vii x3, ix x3; {[3,6],[4,5]}~ -> 1 (x) {[3,5],[4,6]}~");
    return c.finish(4, "worked genus-2 differential");
}

CheckResult small_model_check() {
    Collector c;
    RealPmc r = realify(split_pmc(2));
    TypeD sm = small_model(r);
    std::size_t oracle = brute::central_count(split_pmc(1), true);
    c.expect(sm.gens.size() == 8 && oracle == 8, "small model size " + std::to_string(sm.gens.size()) + " vs oracle " + std::to_string(oracle));
    auto red = mult2_reduction(cfdr_az(r));
    c.expect(red.closed, "split:2 multiplicity>=2 part not closed");
    c.expect(red.sub_provincial_homology == 0, "split:2 substructure homology nonzero");
    TypeD q = simplify(red.quotient);
    c.expect(same_structure(sm, q, [&](const std::string& l) { return small_to_full_label(r, l); }),
             "simplified quotient differs from the small model");
    auto anti = mult2_reduction(cfdr_az(realify(antipodal_pmc(2))));
    c.expect(anti.closed && anti.sub_provincial_homology == 0, "antipodal:2 substructure not contractible");
    c.notes.push_back("8 generators (brute-force oracle 8); quotient matches arrow for arrow; substructure homology 0 at split:2 and antipodal:2 (" +
                      std::to_string(anti.quotient.gens.size()) + " generators remain at antipodal:2)");
    return c.finish(5, "small model and multiplicity-2 contractibility");
}

CheckResult cfar_pairing() {
    Collector c;
    for (const char* name : {"split:2", "split:4"}) {
        RealPmc r = realify(parse_pmc(name));
        TypeD bx = box_A_DD(cfar_az(r), cfdd_identity(r));
        TypeD sm = small_model(r);
        bool same = same_structure(bx, sm, [](const std::string& l) { return "[" + l.substr(0, l.find("⊗")) + "]"; });
        c.expect(same, std::string(name) + " pairing differs from the small model");
        c.notes.push_back(std::string(name) + " equal (" + std::to_string(sm.gens.size()) + " generators, " +
                          std::to_string(sm.arrows.size()) + " arrows)");
    }
    bool rejected = false;
    try {
        cfar_az(realify(split_pmc(3)));
    } catch (const Error& e) {
        rejected = e.code == "NonorientableQuotient";
    }
    c.expect(rejected, "split:3 should be rejected");
    c.notes.push_back("split:3 has a nonorientable quotient and is rejected, so split:4 stands in for it");
    return c.finish(6, "CFAR box DD identity equals the small model");
}

CheckResult ledger() {
    Collector c;
    TypeD wh = whitehead_cfdr_framed(), cb = cable21_cfdr_framed();
    struct Row {
        const char* name;
        TypeA m;
        std::size_t w, cab;
    };
    std::vector<Row> rows = {{"τ=1", staircase_typeA(1), 7, 5},
                             {"τ=-1", staircase_typeA(-1), 9, 3},
                             {"τ=0", staircase_typeA(0), 1, 1},
                             {"box", box_typeA(), 8, 4}};
    std::ostringstream os;
    for (const auto& row : rows) {
        std::size_t w = homology_dim(box_AD(row.m, wh)), k = homology_dim(box_AD(row.m, cb));
        c.expect(w == row.w && k == row.cab, std::string(row.name) + " gives " + std::to_string(w) + "/" + std::to_string(k));
        os << row.name << ": " << w << "/" << k << "  ";
    }
    c.notes.push_back("whitehead/cable " + os.str().substr(0, os.str().size() - 2));
    return c.finish(7, "satellite contribution ledger");
}

CheckResult closed_forms() {
    Collector c;
    auto t0 = std::chrono::steady_clock::now();
    int n = 0;
    for (int det = 1; det <= 13; det += 2)
        for (int tau = -3; tau <= 3; ++tau) {
            AlternatingKnotData k{det, tau};
            if (!k.valid()) continue;
            ++n;
            std::string at = "(" + std::to_string(det) + "," + std::to_string(tau) + ")";
            c.expect(hfr_satellite_dim(Pattern::Whitehead, k) == oracle_hfr_whitehead(k), "whitehead " + at);
            c.expect(hfr_satellite_dim(Pattern::Cable21, k) == oracle_hfr_cable(k), "cable " + at);
            bool strict = oracle_hfr_whitehead(k) < oracle_hf_whitehead(k);
            c.expect(strict == !(det == 1 && tau == 0), "strictness " + at);
        }
    c.expect(seconds_since(t0) < 60.0, "runtime over 1 min");
    c.notes.push_back(std::to_string(n) + " knots, both patterns agree with the closed forms; strict except (1,0)");
    return c.finish(8, "closed-form agreement and strictness");
}

CheckResult thick_torus() {
    Collector c;
    TypeD d = thick_torus_cfdr();
    auto comps = idempotent_components(d);
    c.expect(comps.size() == 2, "expected two components");
    auto x = d.find("x"), y = d.find("y");
    bool x_quiet = true, loop = false;
    for (const auto& a : d.arrows) {
        if (static_cast<std::int64_t>(a.src) == x) x_quiet = false;
        if (static_cast<std::int64_t>(a.src) == y && static_cast<std::int64_t>(a.tgt) == y && a.coef == rho("12")) loop = true;
    }
    c.expect(x_quiet && loop && d.arrows.size() == 1, "arrows");
    c.expect(check_structure_relation(d).ok, "relation");
    c.notes.push_back("two components; δ(x)=0; δ(y)=ρ12⊗y");
    return c.finish(9, "thick torus splitting");
}

std::vector<io::Document> roundtrip_corpus() {
    std::vector<io::Document> v;
    v.push_back(split_pmc(2));
    v.push_back(antipodal_pmc(3));
    for (const auto& f : type_d_fixtures()) v.push_back(f.build());
    for (const char* name : {"split:1", "split:2", "antipodal:2"}) {
        RealPmc r = realify(parse_pmc(name));
        v.push_back(cfdr_az(r));
        v.push_back(cfdr_azbar(r));
    }
    RealPmc s2 = realify(split_pmc(2));
    v.push_back(small_model(s2));
    v.push_back(cfar_az(s2));
    v.push_back(cfdd_identity(s2));
    for (int t = -1; t <= 1; ++t) v.push_back(staircase_typeA(t));
    v.push_back(box_typeA());
    v.push_back(identity_da(torus_algebra()));
    v.push_back(box_AD(staircase_typeA(1), whitehead_cfdr_framed()));
    Element e;
    e.add(rho("1"));
    e.add(rho("123"));
    v.push_back(io::AlgebraElement{torus_algebra(), e});
    return v;
}

CheckResult properties() {
    Collector c;
    std::mt19937_64 rng(20240917);
    std::size_t largest = 0, shrunk = 0;
    for (int i = 0; i < 1000; ++i) {
        TypeD d = random_bounded_structure(rng, 100);
        largest = std::max(largest, d.gens.size());
        TypeD s = simplify(d);
        if (s.gens.size() < d.gens.size()) ++shrunk;
        bool ok = bounded_depth(d) >= 0 && check_structure_relation(d).ok && check_structure_relation(s).ok &&
                  homology_dim(provincial_complex(d)) == homology_dim(provincial_complex(s));
        if (!ok) {
            c.expect(false, "random structure " + std::to_string(i));
            break;
        }
    }
    c.notes.push_back("1000 random structures (up to " + std::to_string(largest) + " generators, " + std::to_string(shrunk) +
                      " reduced by simplify)");

    std::vector<TypeA> as = {staircase_typeA(-2), staircase_typeA(-1), staircase_typeA(0), staircase_typeA(1), staircase_typeA(2),
                             box_typeA()};
    TypeDA id = identity_da(torus_algebra());
    std::size_t pairs = 0;
    for (const auto& f : type_d_fixtures()) {
        TypeD d = f.build();
        for (const auto& m : as) {
            c.expect(verify_d_squared(box_AD(m, d)), std::string("box_AD with ") + f.name);
            ++pairs;
        }
        TypeD t = box_DA_D(id, d);
        c.expect(check_structure_relation(t).ok, std::string("box_DA_D with ") + f.name);
        c.expect(same_structure(t, d, [](const std::string& l) { return l.substr(l.find("⊗") + std::string("⊗").size()); }),
                 std::string("identity bimodule changes ") + f.name);
    }
    c.notes.push_back(std::to_string(pairs) + " box_AD complexes with d^2=0 and " + std::to_string(type_d_fixtures().size()) +
                      " box_DA_D structures valid");

    auto corpus = roundtrip_corpus();
    for (const auto& doc : corpus) {
        std::string a = io::dump(doc);
        std::string b = io::dump(io::load(a));
        c.expect(a == b, std::string("round trip of ") + io::kind_of(doc));
    }
    c.notes.push_back(std::to_string(corpus.size()) + " documents round-trip byte for byte");
    return c.finish(10, "property suites");
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
    static const std::vector<Check> checks = {
        {1, "genus-1 AZ module", [] { return genus_one(1, false); }},
        {2, "genus-1 AZ-bar module", [] { return genus_one(2, true); }},
        {3, "structure relation for AZ and AZ-bar", relations},
        {4, "worked genus-2 differential", worked_genus_two},
        {5, "small model and multiplicity-2 contractibility", small_model_check},
        {6, "CFAR box DD identity equals the small model", cfar_pairing},
        {7, "satellite contribution ledger", ledger},
        {8, "closed-form agreement and strictness", closed_forms},
        {9, "thick torus splitting", thick_torus},
        {10, "property suites", properties},
    };
    return checks;
}

CheckResult run_check(const Check& c) {
    try {
        return c.run();
    } catch (const std::exception& e) {
        return {c.id, c.title, false, std::string("exception: ") + e.what()};
    }
}

std::string format_result(const CheckResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title;
    if (!r.detail.empty()) os << ": " << r.detail;
    return os.str();
}

}  // namespace hfr
