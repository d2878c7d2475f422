// dstruct.cpp
#include "hfr/dstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "hfr/error.hpp"

namespace hfr {

std::uint32_t TypeD::add_gen(std::string label, Idem idem) {
    gens.push_back({std::move(label), idem});
    return static_cast<std::uint32_t>(gens.size() - 1);
}

void TypeD::add_arrow(std::uint32_t s, const Diagram& c, std::uint32_t t, std::string tag) {
    arrows.push_back({s, c, t, std::move(tag)});
}

void TypeD::normalize() {
    std::stable_sort(arrows.begin(), arrows.end(), [](const DArrow& a, const DArrow& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return a.coef < b.coef;
    });
    std::vector<DArrow> out;
    for (std::size_t i = 0; i < arrows.size();) {
        std::size_t j = i;
        while (j < arrows.size() && arrows[j].src == arrows[i].src && arrows[j].tgt == arrows[i].tgt &&
               arrows[j].coef == arrows[i].coef)
            ++j;
        if ((j - i) % 2) out.push_back(arrows[i]);
        i = j;
    }
    arrows = std::move(out);
}

std::int64_t TypeD::find(const std::string& label) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].label == label) return static_cast<std::int64_t>(i);
    return -1;
}

std::vector<std::vector<std::uint32_t>> TypeD::out_arrows() const {
    std::vector<std::vector<std::uint32_t>> out(gens.size());
    for (std::size_t i = 0; i < arrows.size(); ++i) out[arrows[i].src].push_back(static_cast<std::uint32_t>(i));
    return out;
}

void check_idempotents(const TypeD& d) {
    for (const auto& a : d.arrows) {
        if (a.src >= d.gens.size() || a.tgt >= d.gens.size()) throw Error("ValidationError", "arrow endpoint out of range");
        if (!d.alg.valid(a.coef)) throw Error("ValidationError", "InvalidDiagram " + d.alg.str(a.coef));
        if (d.alg.lidem(a.coef) != d.gens[a.src].idem || d.alg.ridem(a.coef) != d.gens[a.tgt].idem)
            throw Error("IdempotentMismatch", d.gens[a.src].label + " -" + d.alg.name(a.coef) + "-> " + d.gens[a.tgt].label);
    }
}

RelationReport check_structure_relation(const TypeD& d) {
    check_idempotents(d);
    auto out = d.out_arrows();
    RelationReport rep;
    using Key = std::pair<Diagram, std::uint32_t>;
    for (std::uint32_t x = 0; x < d.gens.size(); ++x) {
        std::map<Key, int> acc;
        for (auto ai : out[x]) {
            const auto& a = d.arrows[ai];
            for (const auto& t : d.alg.d(a.coef).terms()) acc[{t, a.tgt}] ^= 1;
            for (auto bi : out[a.tgt]) {
                const auto& b = d.arrows[bi];
                if (auto p = d.alg.mul(a.coef, b.coef)) acc[{*p, b.tgt}] ^= 1;
            }
        }
        for (auto& [k, v] : acc)
            if (v) {
                rep.ok = false;
                rep.residuals.push_back({x, k.first, k.second});
            }
    }
    return rep;
}

int default_bound_cap() {
    if (const char* e = std::getenv("HFR_MAX_BOUND_CAP")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    return 64;
}

int bounded_depth(const TypeD& d) {
    const std::size_t n = d.gens.size();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& a : d.arrows) adj[a.src].push_back(a.tgt);
    // iterative DFS with colors; depth = longest path in arrows
    std::vector<int> color(n, 0), depth(n, 0);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (color[s]) continue;
        std::vector<std::pair<std::uint32_t, std::size_t>> st{{s, 0}};
        color[s] = 1;
        while (!st.empty()) {
            auto& [v, i] = st.back();
            if (i < adj[v].size()) {
                auto w = adj[v][i++];
                if (color[w] == 1) return -1;
                if (color[w] == 0) {
                    color[w] = 1;
                    st.push_back({w, 0});
                }
            } else {
                int best = 0;
                for (auto w : adj[v]) best = std::max(best, depth[w] + 1);
                depth[v] = best;
                color[v] = 2;
                st.pop_back();
            }
        }
    }
    int best = 0;
    for (auto x : depth) best = std::max(best, x);
    return best;
}

bool is_bounded(const TypeD& d, int cap) {
    int depth = bounded_depth(d);
    if (depth < 0) return false;
    if (depth + 1 > cap) throw Error("CapExceeded", "unknown/likely unbounded (chains longer than " + std::to_string(cap) + ")");
    return true;
}

namespace {

// (1 + n)^{-1} = 1 + n + n^2 + ... ; terminates since products of moving strands grow
Element unit_inverse(const Algebra& alg, const Element& u, const Diagram& one) {
    Element n = u;
    n.add(one);
    Element inv(one), pw(one);
    for (int guard = 0; guard < 256; ++guard) {
        pw = alg.mul(pw, n);
        if (pw.empty()) return inv;
        inv += pw;
    }
    throw Error("NotInvertible", "coefficient is not a unit");
}

}  // namespace

TypeD simplify(const TypeD& d) {
    const std::size_t n = d.gens.size();
    std::vector<std::map<std::uint32_t, Element>> out(n);
    std::vector<std::set<std::uint32_t>> in(n);
    for (const auto& a : d.arrows) {
        out[a.src][a.tgt].add(a.coef);
        in[a.tgt].insert(a.src);
    }
    std::vector<char> alive(n, 1);
    bool changed = false;
    auto has_idem = [](const Element& e) {
        return std::any_of(e.terms().begin(), e.terms().end(), [](const Diagram& t) { return t.is_idempotent(); });
    };
    for (;;) {
        std::int64_t px = -1, py = -1;
        for (std::uint32_t x = 0; x < n && px < 0; ++x) {
            if (!alive[x]) continue;
            for (auto& [y, e] : out[x])
                if (y != x && has_idem(e)) {
                    px = x;
                    py = y;
                    break;
                }
        }
        if (px < 0) break;
        changed = true;
        auto x = static_cast<std::uint32_t>(px), y = static_cast<std::uint32_t>(py);
        Diagram one = d.alg.idempotent(d.gens[x].idem);
        Element inv = unit_inverse(d.alg, out[x][y], one);
        std::vector<std::pair<std::uint32_t, Element>> from_x;
        for (auto& [w, e] : out[x])
            if (w != y && w != x && e.size()) from_x.emplace_back(w, d.alg.mul(inv, e));
        std::vector<std::uint32_t> into_y(in[y].begin(), in[y].end());
        for (auto z : into_y) {
            if (z == x || z == y || !alive[z]) continue;
            auto it = out[z].find(y);
            if (it == out[z].end() || it->second.empty()) continue;
            Element azy = it->second;
            for (auto& [w, e] : from_x) {
                if (w == y) continue;
                Element p = d.alg.mul(azy, e);
                if (p.empty()) continue;
                out[z][w] += p;
                in[w].insert(z);
            }
        }
        for (auto v : {x, y}) {
            alive[v] = 0;
            for (auto& [w, e] : out[v]) in[w].erase(v);
            out[v].clear();
            for (auto z : in[v]) out[z].erase(v);
            in[v].clear();
        }
    }
    if (!changed) return d;
    TypeD r;
    r.alg = d.alg;
    std::vector<std::uint32_t> idx(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        if (alive[v]) idx[v] = r.add_gen(d.gens[v].label, d.gens[v].idem);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (auto& [w, e] : out[v])
            for (const auto& t : e.terms()) r.add_arrow(idx[v], t, idx[w]);
    }
    r.normalize();
    return r;
}

ChainComplex provincial_complex(const TypeD& d) {
    ChainComplex c;
    for (const auto& g : d.gens) c.basis.push_back(g.label);
    c.boundary.assign(d.gens.size(), {});
    for (const auto& a : d.arrows)
        if (a.coef.is_idempotent()) c.add_arrow(a.src, a.tgt);
    return c;
}

namespace {

TypeD restrict(const TypeD& d, const std::vector<char>& keep) {
    TypeD r;
    r.alg = d.alg;
    std::vector<std::uint32_t> idx(d.gens.size(), 0);
    for (std::uint32_t v = 0; v < d.gens.size(); ++v)
        if (keep[v]) idx[v] = r.add_gen(d.gens[v].label, d.gens[v].idem);
    for (const auto& a : d.arrows)
        if (keep[a.src] && keep[a.tgt]) r.add_arrow(idx[a.src], a.coef, idx[a.tgt], a.tag);
    return r;
}

}  // namespace

SubResult span_substructure(const TypeD& d, const std::function<bool(std::uint32_t)>& in_subset, bool require_closed) {
    std::vector<char> keep(d.gens.size());
    for (std::uint32_t v = 0; v < d.gens.size(); ++v) keep[v] = in_subset(v) ? 1 : 0;
    SubResult res;
    for (const auto& a : d.arrows)
        if (keep[a.src] && !keep[a.tgt]) ++res.leaving;
    res.closed = res.leaving == 0;
    if (require_closed && !res.closed)
        throw Error("NotClosed", std::to_string(res.leaving) + " arrows leave the subset");
    res.part = restrict(d, keep);
    return res;
}

TypeD quotient_structure(const TypeD& d, const std::function<bool(std::uint32_t)>& in_subset) {
    std::vector<char> keep(d.gens.size());
    for (std::uint32_t v = 0; v < d.gens.size(); ++v) keep[v] = in_subset(v) ? 0 : 1;
    return restrict(d, keep);
}

std::vector<std::vector<std::uint32_t>> idempotent_components(const TypeD& d) {
    std::vector<std::uint32_t> parent(d.gens.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto root = [&](std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& a : d.arrows) {
        auto x = root(a.src), y = root(a.tgt);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t v = 0; v < d.gens.size(); ++v) groups[root(v)].push_back(v);
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& [r, g] : groups) out.push_back(std::move(g));
    return out;
}

TypeD direct_sum(const TypeD& a, const TypeD& b, const std::string& pa, const std::string& pb) {
    if (!(a.alg == b.alg)) throw Error("AlgebraMismatch", "direct sum over different algebras");
    TypeD r;
    r.alg = a.alg;
    for (const auto& g : a.gens) r.add_gen(pa + g.label, g.idem);
    for (const auto& g : b.gens) r.add_gen(pb + g.label, g.idem);
    auto off = static_cast<std::uint32_t>(a.gens.size());
    for (const auto& x : a.arrows) r.add_arrow(x.src, x.coef, x.tgt, x.tag);
    for (const auto& x : b.arrows) r.add_arrow(x.src + off, x.coef, x.tgt + off, x.tag);
    return r;
}

bool same_structure(const TypeD& a, const TypeD& b, const std::function<std::string(const std::string&)>& rename) {
    if (!(a.alg == b.alg) || a.gens.size() != b.gens.size()) return false;
    std::set<std::pair<std::string, Idem>> ga, gb;
    for (const auto& g : a.gens) ga.insert({rename(g.label), g.idem});
    for (const auto& g : b.gens) gb.insert({g.label, g.idem});
    if (ga != gb) return false;
    using A = std::tuple<std::string, Diagram, std::string>;
    std::multiset<A> aa, ab;
    auto cmp_a = a, cmp_b = b;
    cmp_a.normalize();
    cmp_b.normalize();
    for (const auto& x : cmp_a.arrows) aa.insert({rename(a.gens[x.src].label), x.coef, rename(a.gens[x.tgt].label)});
    for (const auto& x : cmp_b.arrows) ab.insert({b.gens[x.src].label, x.coef, b.gens[x.tgt].label});
    return aa == ab;
}

std::string describe(const TypeD& d) {
    std::ostringstream os;
    os << d.gens.size() << " generators, " << d.arrows.size() << (d.arrows.size() == 1 ? " arrow" : " arrows");
    if (!d.arrows.empty()) os << ':';
    for (const auto& a : d.arrows) {
        os << (d.arrows.size() == 1 ? " " : "\n  ") << d.gens[a.src].label << " —" << d.alg.name(a.coef) << "→ " << d.gens[a.tgt].label;
        if (!a.tag.empty()) os << "  (" << a.tag << ")";
    }
    return os.str();
}

}  // namespace hfr
