// hfr.cpp — command-line front end
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hfr/az.hpp"
#include "hfr/error.hpp"
#include "hfr/io.hpp"
#include "hfr/reproduce.hpp"
#include "hfr/satellites.hpp"

using namespace hfr;

namespace {

// torus names in display form: ρ2~ -> ρ̃₂, ι0 -> ι₀
std::string pretty(const std::string& s) {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    const std::string rho = "ρ", iota = "ι";
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        bool r = s.compare(i, rho.size(), rho) == 0, io = s.compare(i, iota.size(), iota) == 0;
        if (r || io) {
            std::size_t j = i + (r ? rho.size() : iota.size());
            std::string digits;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) digits += s[j++];
            if (!digits.empty()) {
                bool tilde = r && j < s.size() && s[j] == '~';
                out += r ? rho : iota;
                if (tilde) out += "̃";
                for (char d : digits) out += sub[d - '0'];
                i = tilde ? j + 1 : j;
                continue;
            }
        }
        out += s[i++];
    }
    return out;
}

TypeD load_type_d(const std::string& where) {
    if (where.rfind("fixture:", 0) == 0) {
        std::string name = where.substr(8);
        for (const auto& f : type_d_fixtures())
            if (f.name == name) return f.build();
        throw Error("UsageError", "unknown fixture '" + name + "'");
    }
    auto doc = io::load_file(where);
    if (auto* d = std::get_if<TypeD>(&doc)) return *d;
    throw Error("UsageError", where + " holds a " + io::kind_of(doc) + ", not a type_d document");
}

TypeA load_type_a(const std::string& where) {
    if (where.rfind("staircase:", 0) == 0) return staircase_typeA(std::stoi(where.substr(10)));
    if (where == "box") return box_typeA();
    auto doc = io::load_file(where);
    if (auto* m = std::get_if<TypeA>(&doc)) return *m;
    throw Error("UsageError", where + " holds a " + io::kind_of(doc) + ", not a type_a document");
}

void maybe_dump(const std::string& path, const io::Document& doc) {
    if (!path.empty()) io::save_file(doc, path);
}

std::string bound_line(const TypeD& d) {
    int depth = bounded_depth(d);
    if (depth < 0) return "bounded: no (cycle)";
    is_bounded(d, default_bound_cap());
    return "bounded: yes (longest chain " + std::to_string(depth) + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bordered Floer computations for real Heegaard diagrams", "hfr"};
    app.require_subcommand(1);
    std::string dump_path;

    auto* az = app.add_subcommand("az", "real Auroux-Zarev type D modules");
    std::string pmc_text = "split:1", side = "az", model = "full";
    az->add_option("--pmc", pmc_text, "split:k, antipodal:k or 4k;[a-b,...]");
    az->add_option("--side", side)->check(CLI::IsMember({"az", "azbar"}));
    az->add_option("--model", model)->check(CLI::IsMember({"full", "small", "reduced"}));
    az->add_option("--dump", dump_path, "write the structure as JSON");

    auto* check = app.add_subcommand("check", "load and validate an interchange document");
    std::string file;
    check->add_option("file", file)->required();

    auto* simp = app.add_subcommand("simplify", "cancel idempotent arrows of a type D structure");
    std::string dsrc;
    simp->add_option("d", dsrc, "file or fixture:NAME")->required();
    simp->add_option("--dump", dump_path);

    auto* tensor = app.add_subcommand("tensor", "box tensor products");
    std::string asrc, dasrc, ddsrc, tdsrc;
    tensor->add_option("--a", asrc, "type A: file, staircase:T or box");
    tensor->add_option("--da", dasrc, "type DA file");
    tensor->add_option("--dd", ddsrc, "type DD file (with --a)");
    tensor->add_option("--d", tdsrc, "type D: file or fixture:NAME");
    tensor->add_option("--dump", dump_path);

    auto* mor = app.add_subcommand("mor", "homology of the morphism complex Mor(D1, D2)");
    std::string d1, d2;
    mor->add_option("d1", d1)->required();
    mor->add_option("d2", d2)->required();
    mor->add_option("--dump", dump_path);

    auto* sat = app.add_subcommand("satellite", "dim HFR of the branched double cover of a satellite");
    std::string pattern = "whitehead";
    int det = 1, tau = 0;
    bool compare = false;
    sat->add_option("--pattern", pattern)->check(CLI::IsMember({"whitehead", "cable21", "cable"}));
    sat->add_option("--det", det)->required();
    sat->add_option("--tau", tau)->required();
    sat->add_flag("--compare-oracle", compare);

    auto* fix = app.add_subcommand("fixtures", "built-in type D structures");
    bool list = false;
    std::string show;
    fix->add_flag("--list", list);
    fix->add_option("--show", show);
    fix->add_option("--dump", dump_path);

    auto* rep = app.add_subcommand("reproduce", "run the acceptance checks");
    bool all = false;
    std::vector<int> only;
    rep->add_flag("--all", all);
    rep->add_option("--check", only, "check numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*az) {
            RealPmc r = realify(parse_pmc(pmc_text));
            TypeD d;
            if (model == "full") {
                d = side == "az" ? cfdr_az(r) : cfdr_azbar(r);
            } else if (side != "az") {
                throw Error("UsageError", "small and reduced models are built for the az side");
            } else if (model == "small") {
                d = small_model(r);
            } else {
                auto red = mult2_reduction(cfdr_az(r));
                if (!red.closed) throw Error("NotClosed", "multiplicity>=2 generators are not a substructure");
                std::cout << "multiplicity>=2 part: " << red.sub.gens.size() << " generators, provincial homology "
                          << red.sub_provincial_homology << "\n";
                d = simplify(red.quotient);
            }
            std::cout << pretty(describe(d)) << "\n";
            maybe_dump(dump_path, d);
        } else if (*check) {
            auto doc = io::load_file(file);
            std::cout << "ok: " << io::kind_of(doc);
            if (auto* d = std::get_if<TypeD>(&doc))
                std::cout << ", " << d->gens.size() << " generators, " << d->arrows.size() << (d->arrows.size() == 1 ? " arrow, " : " arrows, ") << bound_line(*d);
            if (auto* m = std::get_if<TypeA>(&doc))
                std::cout << ", " << m->gens.size() << " generators, " << m->actions.size() << " actions";
            if (auto* c = std::get_if<ChainComplex>(&doc)) std::cout << ", homology dimension " << homology_dim(*c);
            std::cout << "\n";
        } else if (*simp) {
            TypeD d = simplify(load_type_d(dsrc));
            std::cout << pretty(describe(d)) << "\n";
            maybe_dump(dump_path, d);
        } else if (*tensor) {
            if (tdsrc.empty()) {
                if (asrc.empty() || ddsrc.empty()) throw Error("UsageError", "tensor needs --d, or --a with --dd");
                auto doc = io::load_file(ddsrc);
                auto* dd = std::get_if<TypeDD>(&doc);
                if (!dd) throw Error("UsageError", ddsrc + " is not a type_dd document");
                TypeD out = box_A_DD(load_type_a(asrc), *dd);
                std::cout << pretty(describe(out)) << "\n";
                maybe_dump(dump_path, out);
            } else if (!dasrc.empty()) {
                auto doc = io::load_file(dasrc);
                auto* da = std::get_if<TypeDA>(&doc);
                if (!da) throw Error("UsageError", dasrc + " is not a type_da document");
                TypeD out = box_DA_D(*da, load_type_d(tdsrc));
                std::cout << pretty(describe(out)) << "\n";
                maybe_dump(dump_path, out);
            } else {
                if (asrc.empty()) throw Error("UsageError", "tensor needs --a or --da with --d");
                TypeD d = load_type_d(tdsrc);
                std::cout << bound_line(d) << "\n";
                ChainComplex c = box_AD(load_type_a(asrc), d);
                std::cout << c.size() << " generators, dim H = " << homology_dim(c) << "\n";
                maybe_dump(dump_path, c);
            }
        } else if (*mor) {
            ChainComplex c = mor_to_d(load_type_d(d1), load_type_d(d2));
            std::cout << c.size() << " generators, dim H = " << homology_dim(c) << "\n";
            maybe_dump(dump_path, c);
        } else if (*sat) {
            Pattern p = parse_pattern(pattern);
            AlternatingKnotData k{det, tau};
            std::size_t dim = hfr_satellite_dim(p, k);
            std::cout << "dim HFR = " << dim << "\n";
            if (compare) {
                std::size_t hfr = p == Pattern::Whitehead ? oracle_hfr_whitehead(k) : oracle_hfr_cable(k);
                std::size_t hf = p == Pattern::Whitehead ? oracle_hf_whitehead(k) : oracle_hf_cable(k);
                std::cout << "closed form HFR = " << hfr << (hfr == dim ? " (agrees)" : " (DISAGREES)") << "\n";
                std::cout << "closed form HF = " << hf << "\n";
                if (hfr != dim) return 1;
            }
        } else if (*fix) {
            if (list || show.empty())
                for (const auto& f : type_d_fixtures()) std::cout << f.name << "\n";
            if (!show.empty()) {
                TypeD d = load_type_d("fixture:" + show);
                std::cout << pretty(describe(d)) << "\n";
                maybe_dump(dump_path, d);
            }
        } else if (*rep) {
            if (!all && only.empty()) throw Error("UsageError", "reproduce needs --all or --check N");
            bool ok = true;
            for (const auto& c : acceptance_checks()) {
                if (!all && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
                auto r = run_check(c);
                ok = ok && r.pass;
                std::cout << format_result(r) << "\n" << std::flush;
            }
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
