// bruteforce.cpp — exhaustive diagram counts
#include "hfr/bruteforce.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace hfr::brute {

namespace {

using Strands = std::vector<std::pair<int, int>>;

void for_each_central(const Pmc& z, const std::function<void(const Strands&, const std::vector<int>&)>& visit) {
    const int n = z.n(), k = z.genus();
    Strands all;
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) all.emplace_back(s, t);
    Strands cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        // pairs used by starts and by ends must be distinct within each side
        std::set<int> sp, ep;
        for (auto [s, t] : cur) {
            sp.insert(z.pair(s));
            ep.insert(z.pair(t));
        }
        if (sp.size() != cur.size() || ep.size() != cur.size()) return;
        std::vector<int> free;
        for (auto [a, b] : z.pairs())
            if (!sp.count(a) && !ep.count(a)) free.push_back(a);
        int need = k - static_cast<int>(cur.size());
        if (need >= 0 && need <= static_cast<int>(free.size())) {
            std::vector<bool> mask(free.size(), false);
            std::fill(mask.begin(), mask.begin() + need, true);
            do {
                std::vector<int> hor;
                for (std::size_t i = 0; i < free.size(); ++i)
                    if (mask[i]) hor.push_back(free[i]);
                visit(cur, hor);
            } while (std::prev_permutation(mask.begin(), mask.end()));
        }
        if (static_cast<int>(cur.size()) == k) return;
        for (std::size_t i = from; i < all.size(); ++i) {
            cur.push_back(all[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

bool mult_one(const Pmc& z, const Strands& s) {
    std::vector<int> cover(z.n() + 1, 0);
    for (auto [a, b] : s)
        for (int p = a; p < b; ++p)
            if (++cover[p] > 1) return false;
    return true;
}

}  // namespace

std::size_t central_count(const Pmc& z, bool mult_one_only) {
    std::size_t n = 0;
    for_each_central(z, [&](const Strands& s, const std::vector<int>&) {
        if (!mult_one_only || mult_one(z, s)) ++n;
    });
    return n;
}

std::size_t symmetric_count(const RealPmc& r, bool mult_one_only) {
    const Pmc& z = r.pmc();
    std::size_t n = 0;
    for_each_central(z, [&](const Strands& s, const std::vector<int>& hor) {
        if (mult_one_only && !mult_one(z, s)) return;
        std::set<std::pair<int, int>> a(s.begin(), s.end()), b;
        for (auto [p, q] : s) b.insert({z.tau(q), z.tau(p)});
        std::set<int> ha, hb;
        for (int h : hor) {
            ha.insert(h);
            ha.insert(z.match(h));
        }
        for (int h : ha) hb.insert(z.tau(h));
        if (a == b && ha == hb) ++n;
    });
    return n;
}

}  // namespace hfr::brute
