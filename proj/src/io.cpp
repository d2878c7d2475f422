// io.cpp — JSON interchange with validation on load
#include "hfr/io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hfr/error.hpp"

namespace hfr::io {

using json = nlohmann::json;

namespace {

json pmc_json(const Pmc& z) {
    json pairs = json::array();
    for (auto [a, b] : z.pairs()) pairs.push_back({a, b});
    return {{"n", z.n()}, {"pairs", pairs}};
}

json alg_json(const Algebra& a) { return {{"pmc", pmc_json(a.pmc())}, {"multiplicity_one", a.mult_one()}}; }

json idem_json(Idem i) {
    json out = json::array();
    for (Mask m = i; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

json sorted(json arr) {
    std::sort(arr.begin(), arr.end());
    return arr;
}

json header(const char* kind) { return {{"format", kFormat}, {"kind", kind}}; }

json to_json(const Pmc& z) {
    json j = header("pmc");
    j["pmc"] = pmc_json(z);
    return j;
}

json to_json(const AlgebraElement& e) {
    json j = header("algebra_element");
    j["algebra"] = alg_json(e.alg);
    json terms = json::array();
    for (const auto& t : e.value.terms()) terms.push_back(e.alg.str(t));
    j["terms"] = sorted(terms);
    return j;
}

json to_json(const TypeD& d) {
    json j = header("type_d");
    j["algebra"] = alg_json(d.alg);
    json gens = json::array(), arrows = json::array();
    for (const auto& g : d.gens) gens.push_back({{"label", g.label}, {"idempotent", idem_json(g.idem)}});
    for (const auto& a : d.arrows) arrows.push_back({d.gens[a.src].label, d.alg.str(a.coef), d.gens[a.tgt].label, a.tag});
    j["generators"] = gens;
    j["arrows"] = sorted(arrows);
    return j;
}

json to_json(const TypeA& m) {
    json j = header("type_a");
    j["algebra"] = alg_json(m.alg);
    json gens = json::array(), acts = json::array();
    for (const auto& g : m.gens) gens.push_back({{"label", g.label}, {"idempotent", idem_json(g.idem)}});
    for (const auto& a : m.actions) {
        json in = json::array();
        for (const auto& x : a.inputs) in.push_back(m.alg.str(x));
        acts.push_back({m.gens[a.src].label, in, m.gens[a.tgt].label});
    }
    j["generators"] = gens;
    j["actions"] = sorted(acts);
    return j;
}

json to_json(const TypeDA& b) {
    json j = header("type_da");
    j["output_algebra"] = alg_json(b.out_alg);
    j["input_algebra"] = alg_json(b.in_alg);
    json gens = json::array(), ents = json::array();
    for (const auto& g : b.gens)
        gens.push_back({{"label", g.label}, {"output_idempotent", idem_json(g.out_idem)}, {"input_idempotent", idem_json(g.in_idem)}});
    for (const auto& e : b.entries) {
        json in = json::array();
        for (const auto& x : e.inputs) in.push_back(b.in_alg.str(x));
        ents.push_back({b.gens[e.src].label, in, b.out_alg.str(e.out), b.gens[e.tgt].label});
    }
    j["generators"] = gens;
    j["entries"] = sorted(ents);
    return j;
}

json to_json(const TypeDD& dd) {
    json j = header("type_dd");
    j["left_algebra"] = alg_json(dd.left_alg);
    j["right_algebra"] = alg_json(dd.right_alg);
    json gens = json::array(), arrows = json::array();
    for (const auto& g : dd.gens)
        gens.push_back({{"label", g.label}, {"left_idempotent", idem_json(g.left)}, {"right_idempotent", idem_json(g.right)}});
    for (const auto& a : dd.arrows)
        arrows.push_back({dd.gens[a.src].label, dd.left_alg.str(a.left), dd.right_alg.str(a.right), dd.gens[a.tgt].label});
    j["generators"] = gens;
    j["arrows"] = sorted(arrows);
    return j;
}

json to_json(const ChainComplex& c) {
    json j = header("chain_complex");
    json diff = json::array();
    for (std::size_t col = 0; col < c.boundary.size(); ++col)
        for (auto row : c.boundary[col]) diff.push_back({c.basis[col], c.basis[row]});
    j["basis"] = c.basis;
    j["differential"] = sorted(diff);
    return j;
}

[[noreturn]] void invalid(const std::string& what, const std::string& detail) {
    throw Error("ValidationError", what + ": " + detail);
}

Pmc read_pmc(const json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return Pmc::make(j.at("n").get<int>(), pairs);
}

Algebra read_alg(const json& j) { return Algebra(read_pmc(j.at("pmc")), j.at("multiplicity_one").get<bool>()); }

Idem read_idem(const Algebra& alg, const json& j) {
    const Pmc& z = alg.pmc();
    Idem i = 0;
    for (const auto& p : j) {
        int v = p.get<int>();
        if (v < 1 || v > z.n() || z.pair(v) != v) invalid("BadIdempotent", "entry " + std::to_string(v) + " is not a pair's lower point");
        if (i & bit(v)) invalid("BadIdempotent", "repeated pair " + std::to_string(v));
        i |= bit(v);
    }
    if (std::popcount(i) != z.genus()) invalid("BadIdempotent", "idempotent must occupy exactly genus-many pairs");
    return i;
}

Diagram read_diagram(const Algebra& alg, const json& j) {
    Diagram d = alg.parse(j.get<std::string>());
    if (!alg.central(d)) invalid("NotCentral", alg.str(d));
    if (alg.mult_one() && !multiplicity_one(d)) invalid("NotMultiplicityOne", alg.str(d));
    return d;
}

// label -> index, rejecting duplicates
struct Labels {
    std::map<std::string, std::uint32_t> at;
    void add(const std::string& l) {
        auto n = static_cast<std::uint32_t>(at.size());
        if (!at.emplace(l, n).second) invalid("DuplicateLabel", l);
    }
    std::uint32_t operator()(const json& j) const {
        auto l = j.get<std::string>();
        auto it = at.find(l);
        if (it == at.end()) invalid("UnknownGenerator", l);
        return it->second;
    }
};

void rethrow_as_validation(const Error& e) {
    if (e.code == "ParseError" || e.code == "ValidationError") throw e;
    throw Error("ValidationError", e.what());
}

TypeD read_type_d(const json& j) {
    TypeD d;
    d.alg = read_alg(j.at("algebra"));
    Labels L;
    for (const auto& g : j.at("generators")) {
        L.add(g.at("label").get<std::string>());
        d.add_gen(g.at("label").get<std::string>(), read_idem(d.alg, g.at("idempotent")));
    }
    for (const auto& a : j.at("arrows")) {
        std::string tag = a.size() > 3 ? a.at(3).get<std::string>() : std::string{};
        d.add_arrow(L(a.at(0)), read_diagram(d.alg, a.at(1)), L(a.at(2)), tag);
    }
    d.normalize();
    check_idempotents(d);
    auto rep = check_structure_relation(d);
    if (!rep.ok) {
        const auto& r = rep.residuals.front();
        invalid("StructureRelation", "residual " + d.alg.str(r.coef) + " from " + d.gens[r.gen].label + " to " + d.gens[r.tgt].label);
    }
    return d;
}

TypeA read_type_a(const json& j) {
    TypeA m;
    m.alg = read_alg(j.at("algebra"));
    Labels L;
    for (const auto& g : j.at("generators")) {
        L.add(g.at("label").get<std::string>());
        m.add_gen(g.at("label").get<std::string>(), read_idem(m.alg, g.at("idempotent")));
    }
    for (const auto& a : j.at("actions")) {
        std::vector<Diagram> in;
        for (const auto& x : a.at(1)) in.push_back(read_diagram(m.alg, x));
        m.add_action(L(a.at(0)), in, L(a.at(2)));
    }
    m.normalize();
    check_idempotents(m);
    auto rep = check_ainfty(m, m.max_inputs());
    if (!rep.ok) invalid("AinftyRelation", rep.witness);
    return m;
}

TypeDA read_type_da(const json& j) {
    TypeDA b;
    b.out_alg = read_alg(j.at("output_algebra"));
    b.in_alg = read_alg(j.at("input_algebra"));
    Labels L;
    for (const auto& g : j.at("generators")) {
        L.add(g.at("label").get<std::string>());
        b.gens.push_back({g.at("label").get<std::string>(), read_idem(b.out_alg, g.at("output_idempotent")),
                          read_idem(b.in_alg, g.at("input_idempotent"))});
    }
    for (const auto& e : j.at("entries")) {
        DAEntry x;
        x.src = L(e.at(0));
        for (const auto& in : e.at(1)) x.inputs.push_back(read_diagram(b.in_alg, in));
        x.out = read_diagram(b.out_alg, e.at(2));
        x.tgt = L(e.at(3));
        Idem cur = b.gens[x.src].in_idem;
        for (const auto& in : x.inputs) {
            if (in.is_idempotent()) invalid("IdempotentInput", "stored DA entries take non-idempotent inputs");
            if (b.in_alg.lidem(in) != cur) invalid("IdempotentMismatch", "input chain from " + b.gens[x.src].label);
            cur = b.in_alg.ridem(in);
        }
        if (cur != b.gens[x.tgt].in_idem) invalid("IdempotentMismatch", "input chain ends off " + b.gens[x.tgt].label);
        if (b.out_alg.lidem(x.out) != b.gens[x.src].out_idem || b.out_alg.ridem(x.out) != b.gens[x.tgt].out_idem)
            invalid("IdempotentMismatch", "output of " + b.gens[x.src].label + " -> " + b.gens[x.tgt].label);
        b.entries.push_back(std::move(x));
    }
    b.normalize();
    return b;
}

TypeDD read_type_dd(const json& j) {
    TypeDD dd;
    dd.left_alg = read_alg(j.at("left_algebra"));
    dd.right_alg = read_alg(j.at("right_algebra"));
    Labels L;
    for (const auto& g : j.at("generators")) {
        L.add(g.at("label").get<std::string>());
        dd.gens.push_back({g.at("label").get<std::string>(), read_idem(dd.left_alg, g.at("left_idempotent")),
                           read_idem(dd.right_alg, g.at("right_idempotent"))});
    }
    for (const auto& a : j.at("arrows")) {
        DDArrow x{L(a.at(0)), read_diagram(dd.left_alg, a.at(1)), read_diagram(dd.right_alg, a.at(2)), L(a.at(3))};
        const auto &s = dd.gens[x.src], &t = dd.gens[x.tgt];
        if (dd.left_alg.lidem(x.left) != s.left || dd.left_alg.ridem(x.left) != t.left ||
            dd.right_alg.lidem(x.right) != s.right || dd.right_alg.ridem(x.right) != t.right)
            invalid("IdempotentMismatch", s.label + " -> " + t.label);
        dd.arrows.push_back(x);
    }
    dd.normalize();
    std::string w;
    if (!dd_relation_holds(dd, &w)) invalid("StructureRelation", w);
    return dd;
}

ChainComplex read_complex(const json& j) {
    ChainComplex c;
    Labels L;
    for (const auto& b : j.at("basis")) {
        L.add(b.get<std::string>());
        c.basis.push_back(b.get<std::string>());
    }
    c.boundary.assign(c.basis.size(), {});
    for (const auto& e : j.at("differential")) c.add_arrow(L(e.at(0)), L(e.at(1)));
    if (!verify_d_squared(c)) invalid("DSquaredNonzero", "differential does not square to zero");
    return c;
}

Document read(const json& j) {
    if (!j.is_object()) throw Error("ParseError", "document is not a JSON object");
    if (j.value("format", "") != kFormat) throw Error("ParseError", std::string("format must be ") + kFormat);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "pmc") return read_pmc(j.at("pmc"));
    if (kind == "algebra_element") {
        AlgebraElement e{read_alg(j.at("algebra")), {}};
        for (const auto& t : j.at("terms")) e.value.add(read_diagram(e.alg, t));
        return e;
    }
    if (kind == "type_d") return read_type_d(j);
    if (kind == "type_a") return read_type_a(j);
    if (kind == "type_da") return read_type_da(j);
    if (kind == "type_dd") return read_type_dd(j);
    if (kind == "chain_complex") return read_complex(j);
    throw Error("ParseError", "unknown kind '" + kind + "'");
}

}  // namespace

const char* kind_of(const Document& d) {
    static const char* names[] = {"pmc", "algebra_element", "type_d", "type_a", "type_da", "type_dd", "chain_complex"};
    return names[d.index()];
}

std::string dump(const Document& d) {
    json j = std::visit([](const auto& x) { return to_json(x); }, d);
    return j.dump(2) + "\n";
}

void save(const Document& d, std::ostream& sink) {
    std::string text = dump(d);
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    sink.flush();
    if (!sink) throw Error("SinkFailure", "write failed");
}

void save_file(const Document& d, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("SinkFailure", "cannot open " + path);
    save(d, f);
}

Document load(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("ParseError", e.what());
    }
    try {
        return read(j);
    } catch (const json::exception& e) {
        throw Error("ParseError", e.what());
    } catch (const std::invalid_argument& e) {
        throw Error("ParseError", e.what());
    } catch (const std::out_of_range& e) {
        throw Error("ParseError", e.what());
    } catch (const Error& e) {
        rethrow_as_validation(e);
    }
    throw Error("ParseError", "unreachable");
}

Document load_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("ParseError", "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return load(ss.str());
}

}  // namespace hfr::io
