// az.cpp — rule enumerators for the real Auroux-Zarev modules
#include "hfr/az.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "hfr/error.hpp"

namespace hfr {

namespace {

using St = std::pair<int, int>;
using Strands = std::vector<St>;

// moving strands plus every horizontal point as a degenerate strand [h,h]
Strands strands_of(const Diagram& d) {
    Strands s(d.begin(), d.end());
    for (Mask h = d.hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        s.emplace_back(p, p);
    }
    return s;
}

struct RuleCtx {
    const Pmc& z;
    const Algebra& alg;
    Strands S;
    int tau(int p) const { return z.tau(p); }
    St ts(St s) const { return {z.tau(s.second), z.tau(s.first)}; }
    bool empty(const std::function<bool(int, int)>& cond) const {
        for (auto [p, q] : S)
            if (cond(p, q)) return false;
        return true;
    }
    Strands rest(const Strands& removed) const {
        Strands out;
        for (auto s : S)
            if (std::find(removed.begin(), removed.end(), s) == removed.end()) out.push_back(s);
        return out;
    }
};

// AZ: drop horizontal points whose partner is not horizontal; reversed strands vanish
std::optional<Diagram> normalize_az(const Pmc& z, const Strands& strs) {
    Diagram d;
    Mask hor = 0;
    int moving = 0;
    for (auto [a, b] : strs)
        if (a < b) ++moving;
    if (moving > Diagram::kCap) return std::nullopt;
    for (auto [a, b] : strs) {
        if (a < b) d.push(a, b);
        if (a == b) hor |= bit(a);
    }
    for (Mask h = hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        if (hor & bit(z.match(p))) d.hor |= bit(p);
    }
    d.canonicalize();
    return d;
}

// AZ-bar: add matched partners of horizontal points; repeated strands are fatal
std::optional<Diagram> normalize_azbar(const Pmc& z, const Strands& strs) {
    std::set<St> seen(strs.begin(), strs.end());
    if (seen.size() != strs.size()) return std::nullopt;
    int moving = 0;
    for (auto [a, b] : strs)
        if (a < b) ++moving;
    if (moving > Diagram::kCap) return std::nullopt;
    Diagram d;
    for (auto [a, b] : strs) {
        if (a < b) d.push(a, b);
        if (a == b) d.hor |= bit(a) | bit(z.match(a));
    }
    d.canonicalize();
    return d;
}

St iv(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string gen_label(const Algebra& alg, const Diagram& d, const char* suffix) { return alg.name(d) + suffix; }

void add_generators(TypeD& out, const std::vector<Diagram>& gens, const char* suffix, bool right,
                    std::map<Diagram, std::uint32_t>& index) {
    for (const auto& g : gens) {
        Idem i = out.alg.complement(right ? out.alg.ridem(g) : out.alg.lidem(g));
        index[g] = out.add_gen(gen_label(out.alg, g, suffix), i);
    }
}

}  // namespace

TypeD cfdr_az(const RealPmc& r) {
    const Pmc& z = r.pmc();
    TypeD out;
    out.alg = Algebra(z);
    const Algebra& alg = out.alg;
    auto gens = symmetric_generators(r);
    std::map<Diagram, std::uint32_t> index;
    add_generators(out, gens, "~", false, index);
    const int n = z.n(), k = z.genus();

    for (const auto& a : gens) {
        RuleCtx c{z, alg, strands_of(a)};
        auto t = [&](int p) { return z.tau(p); };
        std::uint32_t src = index.at(a);
        Idem idem = out.gens[src].idem;
        auto emit = [&](const char* rule, const Strands& removed, const Strands& added, std::optional<Diagram> coef) {
            Strands all = c.rest(removed);
            all.insert(all.end(), added.begin(), added.end());
            auto b = normalize_az(z, all);
            if (!b || !alg.valid(*b) || std::popcount(alg.lidem(*b)) != k) return;
            auto it = index.find(*b);
            if (it == index.end()) return;
            out.add_arrow(src, coef ? *coef : alg.idempotent(idem), it->second, rule);
        };
        Strands fixed, nonfixed;
        for (auto s : c.S) (c.ts(s) == s ? fixed : nonfixed).push_back(s);

        for (auto [i, ti] : fixed)  // (i)
            for (auto [j, tj] : fixed)
                if (i < j && j < tj && tj < ti && c.empty([&](int p, int q) { return i < p && p < j && tj < q && q < ti; }))
                    emit("i", {{i, ti}, {j, tj}}, {{i, tj}, {j, ti}}, std::nullopt);
        for (auto x : nonfixed) {  // (ii)
            auto [i, j] = x;
            for (auto y : nonfixed) {
                if (y == x || y == c.ts(x)) continue;
                auto [l, m] = y;
                if (i < l && l <= m && m < j && j < t(l) &&
                    c.empty([&](int p, int q) { return i < p && p < l && m < q && q < j; }))
                    emit("ii", {x, y, c.ts(x), c.ts(y)}, {{i, m}, {l, j}, {t(j), t(l)}, {t(m), t(i)}}, std::nullopt);
            }
        }
        for (auto x : nonfixed) {  // (iii)
            auto [i, j] = x;
            for (auto [m, tm] : fixed)
                if (i < t(j) && t(j) < m && m < tm && tm < j && j < t(i) &&
                    c.empty([&](int p, int q) { return i < p && p < m && tm < q && q < j; }))
                    emit("iii", {x, c.ts(x), {m, tm}}, {{i, tm}, {t(j), j}, {m, t(i)}}, std::nullopt);
        }
        for (auto x : nonfixed) {  // (iv), one orientation of the pair only
            auto [i, j] = x;
            for (auto [m, tm] : fixed)
                if (m < i && i <= j && j < tm && j < t(i) &&
                    c.empty([&](int p, int q) { return m < p && p < i && j < q && q < tm; }))
                    emit("iv", {x, c.ts(x), {m, tm}}, {{m, j}, {t(j), tm}, {i, t(i)}}, std::nullopt);
        }
        for (auto x : nonfixed) {  // (v)
            auto [i, j] = x;
            for (auto y : nonfixed) {
                if (y == x || y == c.ts(x)) continue;
                auto [l, m] = y;
                if (i < t(j) && t(j) < l && l < t(m) &&
                    c.empty([&](int p, int q) { return i < p && p < l && m < q && q < j; }))
                    emit("v", {x, c.ts(x), y, c.ts(y)}, {{i, m}, {t(j), j}, {l, t(l)}, {t(m), t(i)}}, std::nullopt);
            }
        }
        for (auto x : nonfixed) {  // (vi)
            auto [i, j] = x;
            for (int l = 1; l <= n; ++l)
                if (i <= j && j < l && l < t(i) && c.empty([&](int p, int q) { return i < j && p < i && j < q && q < l; }))
                    if (auto co = alg.chord(idem, t(l), t(j))) emit("vi", {x, c.ts(x)}, {{i, l}, {t(l), t(i)}}, co);
        }
        for (auto x : nonfixed) {  // (vii)
            auto [i, j] = x;
            for (int l = 1; l <= n; ++l)
                if (l < i && i <= j && j < t(i) && c.empty([&](int p, int q) { return l < p && p < i && j < q; }))
                    if (auto co = alg.chord(idem, l, i)) emit("vii", {x, c.ts(x)}, {{l, j}, {t(j), t(l)}}, co);
        }
        for (auto [i, ti] : fixed)  // (viii)
            for (int l = 1; l <= n; ++l)
                if (l > ti && c.empty([&](int p, int q) { return p < i && ti < q && q < l; }))
                    if (auto co = alg.chord(idem, t(l), i)) emit("viii", {{i, ti}}, {{t(l), l}}, co);
        for (auto x : nonfixed) {  // (ix)
            auto [i, j] = x;
            for (int l = 1; l <= n; ++l)
                if (i <= j && j < t(i) && t(i) < l && c.empty([&](int p, int q) { return p < i && j < q && q < l; }))
                    if (auto co = alg.chord(idem, t(l), t(j))) emit("ix", {x, c.ts(x)}, {{i, t(i)}, {t(l), l}}, co);
        }
    }
    out.normalize();
    return out;
}

TypeD cfdr_azbar(const RealPmc& r) {
    const Pmc& z = r.pmc();
    TypeD out;
    out.alg = Algebra(z);
    const Algebra& alg = out.alg;
    auto gens = symmetric_generators(r);
    std::map<Diagram, std::uint32_t> index;
    add_generators(out, gens, "*", true, index);
    const int n = z.n(), k = z.genus(), k2 = 2 * k;

    for (const auto& a : gens) {
        RuleCtx c{z, alg, strands_of(a)};
        auto t = [&](int p) { return z.tau(p); };
        std::uint32_t src = index.at(a);
        Idem idem = out.gens[src].idem;
        auto emit = [&](const char* rule, const Strands& removed, const Strands& added, std::optional<Diagram> coef) {
            Strands all = c.rest(removed);
            for (auto [p, q] : added) all.push_back(iv(p, q));
            auto b = normalize_azbar(z, all);
            if (!b || !alg.valid(*b) || std::popcount(alg.lidem(*b)) != k) return;
            auto it = index.find(*b);
            if (it == index.end()) return;
            if (coef && alg.ridem(*coef) != out.gens[it->second].idem) return;
            out.add_arrow(src, coef ? *coef : alg.idempotent(idem), it->second, rule);
        };
        Strands fixed, nonfixed;
        for (auto s : c.S) (c.ts(s) == s ? fixed : nonfixed).push_back(s);

        for (auto x : nonfixed) {  // (i)
            auto [i, j] = x;
            if (i < t(j) && t(j) <= k2 &&
                c.empty([&](int p, int q) { return i < p && p < t(j) && j < q && q < t(i); }))
                emit("i", {x, c.ts(x)}, {{i, t(i)}, {t(j), j}}, std::nullopt);
        }
        for (auto x : nonfixed) {  // (ii)
            auto [i, j] = x;
            for (auto y : nonfixed) {
                if (y == x || y == c.ts(x)) continue;
                auto [i2, j2] = y;
                if (i < i2 && i2 <= j && j < j2 &&
                    c.empty([&](int p, int q) { return i < p && p < i2 && j < q && q < j2; }))
                    emit("ii", {x, y, c.ts(x), c.ts(y)}, {{i, j2}, {j, i2}, {t(j2), t(i)}, {t(i2), t(j)}}, std::nullopt);
            }
        }
        for (auto x : nonfixed) {  // (iii) and (iv)
            auto [i, j] = x;
            for (auto [l, tl] : fixed) {
                if (i < l && l <= j && j < tl && c.empty([&](int p, int q) { return i < p && p < l && j < q && q < tl; }))
                    emit("iii", {x, c.ts(x), {l, tl}}, {{i, t(i)}, {l, j}, {tl, t(j)}}, std::nullopt);
                if (i < l && l < t(j) && t(j) < j &&
                    c.empty([&](int p, int q) { return i < p && p < t(j) && j < q && q < tl; }))
                    emit("iv", {x, c.ts(x), {l, tl}}, {{t(j), j}, {l, t(i)}, {i, tl}}, std::nullopt);
            }
        }
        for (auto x : nonfixed) {  // (v)
            auto [i, j] = x;
            for (auto [l, tl] : fixed)
                for (auto [m, tm] : fixed)
                    if (i < l && l < m && m <= j && j < tm &&
                        c.empty([&](int p, int q) { return i < p && p < m && j < q && q < tl; }))
                        emit("v", {x, c.ts(x), {l, tl}, {m, tm}}, {{i, tl}, {l, t(i)}, {m, j}, {t(j), tm}}, std::nullopt);
        }
        for (auto x : nonfixed) {  // (vi) and (vii)
            auto [i, j] = x;
            for (int l = 1; l <= n; ++l) {
                if (i <= l && l < j && j < t(i) && c.empty([&](int p, int q) { return p < i && l < q && q < j; }))
                    if (auto co = alg.chord(idem, l, j)) emit("vi", {x, c.ts(x)}, {{i, l}, {t(l), t(i)}}, co);
                // coefficient ends at tau(i): the mirror image of the strand being shortened
                if (i < l && l <= j && j < t(i) && c.empty([&](int p, int q) { return i < p && p < l && j < q; }))
                    if (auto co = alg.chord(idem, t(l), t(i))) emit("vii", {x, c.ts(x)}, {{l, j}, {t(j), t(l)}}, co);
            }
        }
        for (auto [i, ti] : fixed)  // (viii)
            for (int j = 1; j <= n; ++j)
                if (i < j && j <= k2 && c.empty([&](int p, int q) { return i < p && p < j && t(j) < q; }))
                    if (auto co = alg.chord(idem, t(j), ti)) emit("viii", {{i, ti}}, {{j, t(j)}}, co);
        for (auto [i, ti] : fixed)  // (ix), l may equal j
            for (auto [j, tj] : fixed)
                for (int l = 1; l <= n; ++l)
                    if (j <= l && l < tj && tj < ti && c.empty([&](int p, int q) { return p < j && l < q && q < ti; }))
                        if (auto co = alg.chord(idem, l, ti)) emit("ix", {{i, ti}, {j, tj}}, {{j, l}, {t(l), tj}}, co);
    }
    out.normalize();
    return out;
}

namespace {

Diagram embed(const RealPmc& r, const Diagram& a) {
    Diagram d = a;
    Diagram m = tau_act(r, a);
    for (auto [s, t] : m) d.push(s, t);
    d.hor |= m.hor;
    d.canonicalize();
    return d;
}

}  // namespace

TypeD small_model(const RealPmc& r) {
    Pmc h = half_pmc(r);
    const Pmc& z = r.pmc();
    Algebra ah(h);
    TypeD out;
    out.alg = Algebra(z);
    const Algebra& alg = out.alg;
    std::vector<Diagram> gens;
    for (const auto& a : enumerate_generators(h))
        if (multiplicity_one(a)) gens.push_back(a);
    std::map<Diagram, std::uint32_t> index;
    for (const auto& a : gens) index[a] = out.add_gen("[" + ah.name(a) + "]", alg.complement(alg.lidem(embed(r, a))));
    std::vector<Diagram> chords;
    for (const auto& a : enumerate_generators(h))
        if (a.nm == 1) chords.push_back(a);
    for (const auto& a : gens) {
        std::uint32_t src = index.at(a);
        Idem idem = out.gens[src].idem;
        auto arrow = [&](std::optional<Diagram> p, std::optional<Diagram> coef, const char* tag) {
            if (!p || !coef) return;
            auto it = index.find(*p);
            if (it == index.end()) return;
            if (alg.ridem(*coef) != out.gens[it->second].idem) return;
            out.add_arrow(src, *coef, it->second, tag);
        };
        for (const auto& ch : chords) {
            int s = ch.mov[0].first, t = ch.mov[0].second;
            arrow(ah.mul(a, ch), alg.chord(idem, z.tau(t), z.tau(s)), "right");
            arrow(ah.mul(ch, a), alg.chord(idem, s, t), "left");
        }
        for (const auto& b : ah.d(a).terms()) arrow(b, alg.idempotent(idem), "d");
    }
    out.normalize();
    return out;
}

std::string small_to_full_label(const RealPmc& r, const std::string& label) {
    if (label.size() < 2 || label.front() != '[' || label.back() != ']') throw Error("ParseError", "not a small-model label");
    Algebra ah(half_pmc(r));
    Algebra az(r.pmc());
    Diagram a = ah.parse(label.substr(1, label.size() - 2));
    return az.name(embed(r, a)) + "~";
}

Mult2Reduction mult2_reduction(const TypeD& full) {
    std::vector<char> big(full.gens.size());
    for (std::size_t v = 0; v < full.gens.size(); ++v) {
        std::string l = full.gens[v].label;
        if (!l.empty() && (l.back() == '~' || l.back() == '*')) l.pop_back();
        big[v] = multiplicity_one(full.alg.parse(l)) ? 0 : 1;
    }
    auto pred = [&](std::uint32_t v) { return big[v] != 0; };
    Mult2Reduction res;
    auto sub = span_substructure(full, pred);
    res.sub = std::move(sub.part);
    res.closed = sub.closed;
    res.quotient = quotient_structure(full, pred);
    res.sub_provincial_homology = homology_dim(provincial_complex(res.sub));
    return res;
}

bool crosses_midpoint(const Pmc& z, const Diagram& d) {
    for (auto [s, t] : d)
        if (s <= z.n() / 2 && t > z.n() / 2) return true;
    return false;
}

TypeA cfar_az(const RealPmc& r) {
    Pmc h = half_pmc(r);
    const Pmc& z = r.pmc();
    const int half = z.n() / 2;
    Algebra ah(h, true);
    TypeA m;
    m.alg = Algebra(z, true);
    std::map<Diagram, std::uint32_t> index;
    for (const auto& a : ah.basis())
        index[a] = m.add_gen(ah.name(a), ah.ridem(a) | tau_idem(z, ah.lidem(a)));
    auto basis = m.alg.basis();
    std::map<Idem, std::vector<const Diagram*>> by_left;
    for (const auto& b : basis)
        if (!b.is_idempotent() && !crosses_midpoint(z, b)) by_left[m.alg.lidem(b)].push_back(&b);
    for (auto& [a, src] : index) {
        for (const auto& t : ah.d(a).terms()) m.add_action(src, {}, index.at(t));
        for (const Diagram* b : by_left[m.gens[src].idem]) {
            Diagram lo, up;
            for (auto [s, t] : *b) (t <= half ? lo : up).push(s, t);
            lo.hor = b->hor & ((bit(half + 1) - 1));
            up.hor = b->hor & ~lo.hor;
            auto left = ah.mul(tau_act(r, up), a);
            if (!left) continue;
            auto res = ah.mul(*left, lo);
            if (!res) continue;
            m.add_action(src, {*b}, index.at(*res));
        }
    }
    m.normalize();
    return m;
}

TypeDD cfdd_identity(const RealPmc& r) {
    const Pmc& z = r.pmc();
    TypeDD dd;
    dd.left_alg = Algebra(z, true);
    dd.right_alg = Algebra(z);
    std::map<Idem, std::uint32_t> by_left;
    for (Idem i : dd.left_alg.idempotents()) {
        by_left[i] = static_cast<std::uint32_t>(dd.gens.size());
        dd.gens.push_back({dd.left_alg.idem_str(i), i, tau_idem(z, dd.left_alg.complement(i))});
    }
    for (std::uint32_t g = 0; g < dd.gens.size(); ++g)
        for (int s = 1; s <= z.n(); ++s)
            for (int t = s + 1; t <= z.n(); ++t) {
                auto l = dd.left_alg.chord(dd.gens[g].left, s, t);
                if (!l) continue;
                auto rt = dd.right_alg.chord(dd.gens[g].right, z.tau(t), z.tau(s));
                if (!rt) continue;
                auto it = by_left.find(dd.left_alg.ridem(*l));
                if (it == by_left.end()) continue;
                if (dd.right_alg.ridem(*rt) != dd.gens[it->second].right) continue;
                dd.arrows.push_back({g, *l, *rt, it->second});
            }
    dd.normalize();
    return dd;
}

}  // namespace hfr
