// props.cpp — random bounded type D structures
#include "hfr/props.hpp"

#include <map>

#include "hfr/error.hpp"
#include "hfr/satellites.hpp"

namespace hfr {

TypeD change_basis(const TypeD& d, std::uint32_t x, std::uint32_t y) {
    if (x == y || d.gens[x].idem != d.gens[y].idem) throw Error("UsageError", "basis change needs two generators with one idempotent");
    std::map<std::pair<std::uint32_t, std::uint32_t>, Element> m;
    for (const auto& a : d.arrows) m[{a.src, a.tgt}].add(a.coef);
    auto entry = [&](std::uint32_t g, std::uint32_t h) {
        auto it = m.find({g, h});
        return it == m.end() ? Element{} : it->second;
    };
    const auto n = static_cast<std::uint32_t>(d.gens.size());
    // conjugation by 1 + e_xy: row x gains row y, then column y gains column x
    for (std::uint32_t h = 0; h < n; ++h) m[{x, h}] += entry(y, h);
    for (std::uint32_t g = 0; g < n; ++g) m[{g, y}] += entry(g, x);
    TypeD r;
    r.alg = d.alg;
    r.gens = d.gens;
    for (const auto& [key, el] : m)
        for (const auto& t : el.terms()) r.add_arrow(key.first, t, key.second);
    r.normalize();
    return r;
}

TypeD random_bounded_structure(std::mt19937_64& rng, std::size_t max_gens) {
    static const std::vector<TypeD> parts = {
        whitehead_cfdr_framed(), whitehead_cfdr_unframed(), cable21_cfdr_framed(), cable21_cfdr_unframed(),
        box_typeD(), staircase_typeD(1), staircase_typeD(-1), staircase_typeD(2), staircase_typeD(-3),
    };
    TypeD acc;
    acc.alg = torus_algebra();
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    std::size_t target = 1 + pick(max_gens);
    int serial = 0;
    while (true) {
        TypeD piece;
        if (pick(3) == 0) {
            piece.alg = acc.alg;
            int which = static_cast<int>(pick(2));
            auto a = piece.add_gen("a", iota_idem(which));
            auto b = piece.add_gen("b", iota_idem(which));
            piece.add_arrow(a, iota(which), b);
        } else {
            piece = parts[pick(parts.size())];
        }
        if (acc.gens.size() + piece.gens.size() > target) break;
        acc = direct_sum(acc, piece, "", "s" + std::to_string(serial++) + ".");
    }
    if (acc.gens.empty()) {
        acc.add_gen("lone", iota_idem(0));
        return acc;
    }
    std::size_t changes = pick(3 * acc.gens.size() + 1);
    for (std::size_t i = 0; i < changes; ++i) {
        auto x = static_cast<std::uint32_t>(pick(acc.gens.size()));
        auto y = static_cast<std::uint32_t>(pick(acc.gens.size()));
        if (x == y || acc.gens[x].idem != acc.gens[y].idem) continue;
        TypeD next = change_basis(acc, x, y);
        if (bounded_depth(next) >= 0) acc = std::move(next);  // boundedness depends on the basis
    }
    return acc;
}

}  // namespace hfr
