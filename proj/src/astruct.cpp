// astruct.cpp
#include "hfr/astruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hfr/error.hpp"

namespace hfr {

std::uint32_t TypeA::add_gen(std::string label, Idem idem) {
    gens.push_back({std::move(label), idem});
    return static_cast<std::uint32_t>(gens.size() - 1);
}

void TypeA::add_action(std::uint32_t s, std::vector<Diagram> in, std::uint32_t t) {
    actions.push_back({s, std::move(in), t});
}

namespace {

template <class T, class Key>
void cancel_pairs(std::vector<T>& v, Key key) {
    std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && key(v[j]) == key(v[i])) ++j;
        if ((j - i) % 2) out.push_back(v[i]);
        i = j;
    }
    v = std::move(out);
}

}  // namespace

void TypeA::normalize() {
    cancel_pairs(actions, [](const AAction& a) { return std::tie(a.src, a.inputs, a.tgt); });
}

std::size_t TypeA::max_inputs() const {
    std::size_t m = 0;
    for (const auto& a : actions) m = std::max(m, a.inputs.size());
    return m;
}

void TypeDA::normalize() {
    cancel_pairs(entries, [](const DAEntry& e) { return std::tie(e.src, e.inputs, e.out, e.tgt); });
}

std::size_t TypeDA::max_inputs() const {
    std::size_t m = 0;
    for (const auto& e : entries) m = std::max(m, e.inputs.size());
    return m;
}

void TypeDD::normalize() {
    cancel_pairs(arrows, [](const DDArrow& a) { return std::tie(a.src, a.tgt, a.left, a.right); });
}

void check_idempotents(const TypeA& m) {
    for (const auto& a : m.actions) {
        if (a.src >= m.gens.size() || a.tgt >= m.gens.size()) throw Error("ValidationError", "action endpoint out of range");
        Idem cur = m.gens[a.src].idem;
        for (const auto& x : a.inputs) {
            if (!m.alg.valid(x)) throw Error("ValidationError", "InvalidDiagram " + m.alg.str(x));
            if (x.is_idempotent()) throw Error("ValidationError", "idempotent input in a stored action");
            if (m.alg.lidem(x) != cur) throw Error("IdempotentMismatch", "action on " + m.gens[a.src].label);
            cur = m.alg.ridem(x);
        }
        if (cur != m.gens[a.tgt].idem) throw Error("IdempotentMismatch", "action " + m.gens[a.src].label + " -> " + m.gens[a.tgt].label);
    }
}

namespace {

using Seq = std::vector<Diagram>;

struct ActionTable {
    std::map<std::pair<std::uint32_t, Seq>, std::vector<std::uint32_t>> at;
    explicit ActionTable(const TypeA& m) {
        for (const auto& a : m.actions) at[{a.src, a.inputs}].push_back(a.tgt);
    }
    const std::vector<std::uint32_t>& operator()(std::uint32_t x, const Seq& s) const {
        static const std::vector<std::uint32_t> none;
        auto it = at.find({x, s});
        return it == at.end() ? none : it->second;
    }
};

std::string seq_str(const Algebra& alg, const Seq& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + alg.name(s[i]);
    return out + ")";
}

}  // namespace

AinftyReport check_ainfty(const TypeA& m, std::size_t max_inputs) {
    check_idempotents(m);
    TypeA mm = m;
    mm.normalize();
    ActionTable tab(mm);
    const Algebra& alg = m.alg;

    std::map<Diagram, std::vector<std::pair<Diagram, Diagram>>> factors;
    std::map<Diagram, std::vector<Diagram>> dinv;
    {
        std::set<Diagram> inputs;
        for (const auto& a : mm.actions) inputs.insert(a.inputs.begin(), a.inputs.end());
        auto basis = alg.basis();
        for (const auto& b : basis) {
            if (b.is_idempotent()) continue;
            for (const auto& t : alg.d(b).terms())
                if (inputs.count(t)) dinv[t].push_back(b);
            for (const auto& c : basis) {
                if (c.is_idempotent()) continue;
                auto p = alg.mul(b, c);
                if (p && inputs.count(*p)) factors[*p].push_back({b, c});
            }
        }
    }

    std::set<std::pair<std::uint32_t, Seq>> keys;
    std::vector<std::vector<const AAction*>> by_src(mm.gens.size());
    for (const auto& a : mm.actions) by_src[a.src].push_back(&a);
    for (const auto& a : mm.actions) {
        for (const auto* b : by_src[a.tgt]) {
            if (a.inputs.size() + b->inputs.size() > max_inputs) continue;
            Seq s = a.inputs;
            s.insert(s.end(), b->inputs.begin(), b->inputs.end());
            keys.insert({a.src, s});
        }
        for (std::size_t j = 0; j < a.inputs.size(); ++j) {
            if (a.inputs.size() + 1 <= max_inputs) {
                auto f = factors.find(a.inputs[j]);
                if (f != factors.end())
                    for (auto& [b, c] : f->second) {
                        Seq s(a.inputs.begin(), a.inputs.begin() + j);
                        s.push_back(b);
                        s.push_back(c);
                        s.insert(s.end(), a.inputs.begin() + j + 1, a.inputs.end());
                        keys.insert({a.src, s});
                    }
            }
            auto di = dinv.find(a.inputs[j]);
            if (di != dinv.end())
                for (const auto& b : di->second) {
                    Seq s = a.inputs;
                    s[j] = b;
                    keys.insert({a.src, s});
                }
        }
    }

    AinftyReport rep;
    for (const auto& [x, s] : keys) {
        ++rep.relations_checked;
        std::map<std::uint32_t, int> acc;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            Seq head(s.begin(), s.begin() + i), tail(s.begin() + i, s.end());
            for (auto y : tab(x, head))
                for (auto z : tab(y, tail)) acc[z] ^= 1;
        }
        for (std::size_t j = 0; j + 1 < s.size(); ++j) {
            auto p = alg.mul(s[j], s[j + 1]);
            if (!p) continue;
            Seq t(s.begin(), s.begin() + j);
            t.push_back(*p);
            t.insert(t.end(), s.begin() + j + 2, s.end());
            for (auto z : tab(x, t)) acc[z] ^= 1;
        }
        for (std::size_t j = 0; j < s.size(); ++j)
            for (const auto& dt : alg.d(s[j]).terms()) {
                Seq t = s;
                t[j] = dt;
                for (auto z : tab(x, t)) acc[z] ^= 1;
            }
        for (auto& [z, v] : acc)
            if (v) {
                rep.ok = false;
                if (rep.witness.empty())
                    rep.witness = "RelationFailure at " + m.gens[x].label + " " + seq_str(alg, s) + " -> " + m.gens[z].label;
            }
    }
    return rep;
}

bool dd_relation_holds(const TypeDD& dd, std::string* witness) {
    for (const auto& a : dd.arrows) {
        const auto &s = dd.gens.at(a.src), &t = dd.gens.at(a.tgt);
        if (dd.left_alg.lidem(a.left) != s.left || dd.left_alg.ridem(a.left) != t.left ||
            dd.right_alg.lidem(a.right) != s.right || dd.right_alg.ridem(a.right) != t.right)
            throw Error("IdempotentMismatch", "DD arrow " + s.label + " -> " + t.label);
    }
    std::vector<std::vector<const DDArrow*>> out(dd.gens.size());
    for (const auto& a : dd.arrows) out[a.src].push_back(&a);
    for (std::uint32_t x = 0; x < dd.gens.size(); ++x) {
        std::map<std::tuple<Diagram, Diagram, std::uint32_t>, int> acc;
        for (const auto* a : out[x]) {
            for (const auto& t : dd.left_alg.d(a->left).terms()) acc[{t, a->right, a->tgt}] ^= 1;
            for (const auto& t : dd.right_alg.d(a->right).terms()) acc[{a->left, t, a->tgt}] ^= 1;
            for (const auto* b : out[a->tgt]) {
                auto l = dd.left_alg.mul(a->left, b->left);
                if (!l) continue;
                auto r = dd.right_alg.mul(a->right, b->right);
                if (!r) continue;
                acc[{*l, *r, b->tgt}] ^= 1;
            }
        }
        for (auto& [k, v] : acc)
            if (v) {
                if (witness)
                    *witness = dd.gens[x].label + ": " + dd.left_alg.str(std::get<0>(k)) + " (x) " +
                               dd.right_alg.str(std::get<1>(k)) + " -> " + dd.gens[std::get<2>(k)].label;
                return false;
            }
    }
    return true;
}

TypeA close_actions(const TypeA& m, std::size_t max_inputs) {
    std::set<std::tuple<std::uint32_t, Seq, std::uint32_t>> have;
    for (const auto& a : m.actions) have.insert({a.src, a.inputs, a.tgt});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::tuple<std::uint32_t, Seq, std::uint32_t>> cur(have.begin(), have.end());
        std::multimap<std::uint32_t, const std::tuple<std::uint32_t, Seq, std::uint32_t>*> by_src;
        for (const auto& c : cur) by_src.insert({std::get<0>(c), &c});
        for (const auto& [x, a, y] : cur) {
            if (a.empty()) continue;
            auto range = by_src.equal_range(y);
            for (auto it = range.first; it != range.second; ++it) {
                const auto& [y2, b, z] = *it->second;
                if (b.empty() || a.size() + b.size() - 1 > max_inputs) continue;
                auto p = m.alg.mul(a.back(), b.front());
                if (!p) continue;
                Seq s(a.begin(), a.end() - 1);
                s.push_back(*p);
                s.insert(s.end(), b.begin() + 1, b.end());
                if (have.insert({x, s, z}).second) grew = true;
            }
        }
    }
    TypeA r;
    r.alg = m.alg;
    r.gens = m.gens;
    for (const auto& [x, s, y] : have) r.add_action(x, s, y);
    return r;
}

TypeA direct_sum(const TypeA& a, const TypeA& b, const std::string& pa, const std::string& pb) {
    if (!(a.alg == b.alg)) throw Error("AlgebraMismatch", "direct sum over different algebras");
    TypeA r;
    r.alg = a.alg;
    for (const auto& g : a.gens) r.add_gen(pa + g.label, g.idem);
    for (const auto& g : b.gens) r.add_gen(pb + g.label, g.idem);
    auto off = static_cast<std::uint32_t>(a.gens.size());
    for (const auto& x : a.actions) r.add_action(x.src, x.inputs, x.tgt);
    for (const auto& x : b.actions) r.add_action(x.src + off, x.inputs, x.tgt + off);
    return r;
}

namespace {

// visit every chain y -> c1 -> y1 -> ... -> ck -> yk of length 1..maxlen;
// chains stop after an idempotent coefficient, which only pairs with m_2
template <class F>
void for_chains(const TypeD& d, const std::vector<std::vector<std::uint32_t>>& out, std::uint32_t y,
                std::size_t maxlen, F&& f) {
    Seq seq;
    auto rec = [&](auto&& self, std::uint32_t cur) -> void {
        if (seq.size() >= maxlen) return;
        for (auto ai : out[cur]) {
            const auto& a = d.arrows[ai];
            if (a.coef.is_idempotent() && !seq.empty()) continue;
            seq.push_back(a.coef);
            f(seq, a.tgt);
            if (!a.coef.is_idempotent()) self(self, a.tgt);
            seq.pop_back();
        }
    };
    rec(rec, y);
}

}  // namespace

ChainComplex box_AD(const TypeA& m, const TypeD& d) {
    if (m.alg.pmc() != d.alg.pmc()) throw Error("AlgebraMismatch", "type A and type D over different circles");
    TypeA mm = m;
    mm.normalize();
    ActionTable tab(mm);
    std::size_t maxlen = mm.max_inputs();
    ChainComplex c;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> idx;
    for (std::uint32_t x = 0; x < mm.gens.size(); ++x)
        for (std::uint32_t y = 0; y < d.gens.size(); ++y)
            if (mm.gens[x].idem == d.gens[y].idem) {
                idx[{x, y}] = static_cast<std::uint32_t>(c.basis.size());
                c.basis.push_back(mm.gens[x].label + "⊗" + d.gens[y].label);
            }
    c.boundary.assign(c.basis.size(), {});
    auto out = d.out_arrows();
    for (auto& [key, from] : idx) {
        auto [x, y] = key;
        for (auto x2 : tab(x, {})) c.add_arrow(from, idx.at({x2, y}));
        for_chains(d, out, y, std::max<std::size_t>(maxlen, 1), [&](const Seq& s, std::uint32_t yk) {
            if (s.size() == 1 && s[0].is_idempotent()) {
                c.add_arrow(from, idx.at({x, yk}));
                return;
            }
            for (auto x2 : tab(x, s)) c.add_arrow(from, idx.at({x2, yk}));
        });
    }
    return c;
}

TypeD box_DA_D(const TypeDA& b, const TypeD& d) {
    if (b.in_alg.pmc() != d.alg.pmc()) throw Error("AlgebraMismatch", "DA input algebra differs from the type D algebra");
    TypeDA bb = b;
    bb.normalize();
    std::map<std::pair<std::uint32_t, Seq>, std::vector<std::pair<Diagram, std::uint32_t>>> tab;
    for (const auto& e : bb.entries) tab[{e.src, e.inputs}].push_back({e.out, e.tgt});
    TypeD r;
    r.alg = b.out_alg;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> idx;
    for (std::uint32_t x = 0; x < bb.gens.size(); ++x)
        for (std::uint32_t y = 0; y < d.gens.size(); ++y)
            if (bb.gens[x].in_idem == d.gens[y].idem)
                idx[{x, y}] = r.add_gen(bb.gens[x].label + "⊗" + d.gens[y].label, bb.gens[x].out_idem);
    auto out = d.out_arrows();
    for (auto& [key, from] : idx) {
        auto [x, y] = key;
        auto emit = [&](const Seq& s, std::uint32_t yk) {
            auto it = tab.find({x, s});
            if (it == tab.end()) return;
            for (auto& [o, x2] : it->second) r.add_arrow(from, o, idx.at({x2, yk}));
        };
        emit({}, y);
        for_chains(d, out, y, std::max<std::size_t>(bb.max_inputs(), 1), [&](const Seq& s, std::uint32_t yk) {
            if (s.size() == 1 && s[0].is_idempotent()) {
                r.add_arrow(from, r.alg.idempotent(bb.gens[x].out_idem), idx.at({x, yk}));
                return;
            }
            emit(s, yk);
        });
    }
    r.normalize();
    return r;
}

TypeD box_A_DD(const TypeA& m, const TypeDD& dd) {
    if (m.alg.pmc() != dd.left_alg.pmc()) throw Error("AlgebraMismatch", "type A algebra differs from the DD left algebra");
    TypeA mm = m;
    mm.normalize();
    ActionTable tab(mm);
    std::size_t maxlen = std::max<std::size_t>(mm.max_inputs(), 1);
    TypeD r;
    r.alg = dd.right_alg;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> idx;
    for (std::uint32_t x = 0; x < mm.gens.size(); ++x)
        for (std::uint32_t g = 0; g < dd.gens.size(); ++g)
            if (mm.gens[x].idem == dd.gens[g].left)
                idx[{x, g}] = r.add_gen(mm.gens[x].label + "⊗" + dd.gens[g].label, dd.gens[g].right);
    std::vector<std::vector<const DDArrow*>> out(dd.gens.size());
    for (const auto& a : dd.arrows) out[a.src].push_back(&a);
    for (auto& [key, from] : idx) {
        auto [x, g] = key;
        for (auto x2 : tab(x, {})) r.add_arrow(from, r.alg.idempotent(dd.gens[g].right), idx.at({x2, g}));
        Seq lefts;
        auto rec = [&](auto&& self, std::uint32_t cur, const Diagram& right) -> void {
            if (lefts.size() >= maxlen) return;
            for (const auto* a : out[cur]) {
                if (a->left.is_idempotent() && !lefts.empty()) continue;
                Diagram rr = a->right;
                if (!lefts.empty()) {
                    auto p = r.alg.mul(right, a->right);
                    if (!p) continue;
                    rr = *p;
                }
                lefts.push_back(a->left);
                if (a->left.is_idempotent()) {
                    r.add_arrow(from, rr, idx.at({x, a->tgt}));
                } else {
                    for (auto x2 : tab(x, lefts)) r.add_arrow(from, rr, idx.at({x2, a->tgt}));
                    self(self, a->tgt, rr);
                }
                lefts.pop_back();
            }
        };
        rec(rec, g, Diagram{});
    }
    r.normalize();
    return r;
}

ChainComplex mor_to_d(const TypeD& d1, const TypeD& d2) {
    if (!(d1.alg == d2.alg)) throw Error("AlgebraMismatch", "morphism complex needs a common algebra");
    const Algebra& alg = d1.alg;
    auto basis = alg.basis();
    std::map<Idem, std::vector<const Diagram*>> by_left;
    for (const auto& a : basis) by_left[alg.lidem(a)].push_back(&a);
    ChainComplex c;
    std::map<std::tuple<std::uint32_t, Diagram, std::uint32_t>, std::uint32_t> idx;
    for (std::uint32_t x1 = 0; x1 < d1.gens.size(); ++x1)
        for (const Diagram* a : by_left[d1.gens[x1].idem])
            for (std::uint32_t x2 = 0; x2 < d2.gens.size(); ++x2)
                if (alg.ridem(*a) == d2.gens[x2].idem) {
                    idx[{x1, *a, x2}] = static_cast<std::uint32_t>(c.basis.size());
                    c.basis.push_back(d1.gens[x1].label + "|" + alg.name(*a) + "|" + d2.gens[x2].label);
                }
    c.boundary.assign(c.basis.size(), {});
    auto out2 = d2.out_arrows();
    std::vector<std::vector<std::uint32_t>> in1(d1.gens.size());
    for (std::uint32_t i = 0; i < d1.arrows.size(); ++i) in1[d1.arrows[i].tgt].push_back(i);
    auto hit = [&](std::uint32_t from, std::uint32_t x1, const Diagram& a, std::uint32_t x2) {
        auto it = idx.find({x1, a, x2});
        if (it == idx.end()) throw Error("InternalError", "morphism term outside the basis");
        c.add_arrow(from, it->second);
    };
    for (auto& [key, from] : idx) {
        auto& [x1, a, x2] = key;
        for (auto bi : out2[x2]) {
            const auto& b = d2.arrows[bi];
            if (auto p = alg.mul(a, b.coef)) hit(from, x1, *p, b.tgt);
        }
        for (auto ci : in1[x1]) {
            const auto& e = d1.arrows[ci];
            if (auto p = alg.mul(e.coef, a)) hit(from, e.src, *p, x2);
        }
        for (const auto& t : alg.d(a).terms()) hit(from, x1, t, x2);
    }
    return c;
}

TypeDA identity_da(const Algebra& alg) {
    TypeDA b;
    b.out_alg = b.in_alg = alg;
    std::map<Idem, std::uint32_t> gi;
    for (Idem i : alg.idempotents()) {
        gi[i] = static_cast<std::uint32_t>(b.gens.size());
        b.gens.push_back({alg.idem_str(i), i, i});
    }
    for (const auto& a : alg.basis())
        if (!a.is_idempotent()) b.entries.push_back({gi.at(alg.lidem(a)), {a}, a, gi.at(alg.ridem(a))});
    return b;
}

}  // namespace hfr
