// algebra.cpp
#include "hfr/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hfr/error.hpp"

namespace hfr {

void Diagram::push(int s, int t) {
    if (nm >= kCap) throw Error("CapacityExceeded", "more than 16 moving strands");
    mov[nm++] = {static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(t)};
}

void Diagram::canonicalize() { std::sort(mov.begin(), mov.begin() + nm); }

bool Diagram::operator==(const Diagram& o) const {
    return nm == o.nm && hor == o.hor && std::equal(begin(), end(), o.begin());
}

namespace {

// lexicographic order of the sorted point lists
bool set_less(Mask a, Mask b) {
    Mask x = a ^ b;
    if (!x) return false;
    int low = std::countr_zero(x);
    if (a & bit(low)) return (b >> low) != 0;
    return (a >> low) == 0;
}

}  // namespace

bool Diagram::operator<(const Diagram& o) const {
    if (std::lexicographical_compare(begin(), end(), o.begin(), o.end())) return true;
    if (std::lexicographical_compare(o.begin(), o.end(), begin(), end())) return false;
    return set_less(hor, o.hor);
}

std::size_t DiagramHash::operator()(const Diagram& d) const {
    std::uint64_t h = d.hor * 0x9E3779B97F4A7C15ull + d.nm;
    for (auto [s, t] : d) h = (h ^ (std::uint64_t(s) << 8 | t)) * 0x100000001B3ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
}

void Element::add(const Diagram& d) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d);
    if (it != terms_.end() && *it == d)
        terms_.erase(it);
    else
        terms_.insert(it, d);
}

Element& Element::operator+=(const Element& o) {
    std::vector<Diagram> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

int crossings(const std::vector<std::pair<int, int>>& st) {
    int c = 0;
    for (std::size_t i = 0; i < st.size(); ++i)
        for (std::size_t j = i + 1; j < st.size(); ++j) {
            auto [a, b] = st[i];
            auto [p, q] = st[j];
            if ((a < p && b > q) || (p < a && q > b)) ++c;
        }
    return c;
}

bool Algebra::valid(const Diagram& d) const {
    Mask starts = 0, ends = 0, sp = 0, ep = 0;
    for (auto [s, t] : d) {
        if (s >= t || s < 1 || t > z_.n()) return false;
        if (sp & bit(z_.pair(s))) return false;
        if (ep & bit(z_.pair(t))) return false;
        sp |= bit(z_.pair(s));
        ep |= bit(z_.pair(t));
        starts |= bit(s);
        ends |= bit(t);
    }
    for (Mask h = d.hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        if (p < 1 || p > z_.n()) return false;
        if (!(d.hor & bit(z_.match(p)))) return false;
    }
    return !(d.hor & (starts | ends));
}

Idem Algebra::lidem(const Diagram& d) const {
    Idem i = 0;
    for (auto [s, t] : d) i |= bit(z_.pair(s));
    for (Mask h = d.hor; h; h &= h - 1) i |= bit(z_.pair(std::countr_zero(h)));
    return i;
}

Idem Algebra::ridem(const Diagram& d) const {
    Idem i = 0;
    for (auto [s, t] : d) i |= bit(z_.pair(t));
    for (Mask h = d.hor; h; h &= h - 1) i |= bit(z_.pair(std::countr_zero(h)));
    return i;
}

bool Algebra::central(const Diagram& d) const {
    return valid(d) && std::popcount(lidem(d)) == z_.genus();
}

Idem Algebra::complement(Idem i) const { return complement_idempotent(z_, i); }

Idem complement_idempotent(const Pmc& z, Idem i) {
    Idem all = 0;
    for (auto [a, b] : z.pairs()) all |= bit(a);
    return all & ~i;
}

Diagram Algebra::idempotent(Idem i) const {
    Diagram d;
    for (Mask m = i; m; m &= m - 1) {
        int p = std::countr_zero(m);
        d.hor |= bit(p) | bit(z_.match(p));
    }
    return d;
}

std::vector<Idem> Algebra::idempotents() const {
    auto ps = z_.pairs();
    int np = static_cast<int>(ps.size()), k = z_.genus();
    std::vector<Idem> out;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << np); ++sub) {
        if (std::popcount(sub) != k) continue;
        Idem i = 0;
        for (int j = 0; j < np; ++j)
            if (sub & (std::uint64_t{1} << j)) i |= bit(ps[j].first);
        out.push_back(i);
    }
    std::sort(out.begin(), out.end(), [](Idem a, Idem b) { return set_less(a, b); });
    return out;
}

std::optional<Diagram> Algebra::mul(const Diagram& x, const Diagram& y) const {
    if (ridem(x) != lidem(y)) return std::nullopt;
    std::vector<std::pair<int, int>> res, xl, yl;
    int ystart[Pmc::kMaxPoints + 2] = {0};
    Mask xend = 0;
    for (auto [s, t] : y) ystart[s] = t;
    for (auto [s, t] : x) {
        xend |= bit(t);
        if (ystart[t]) {
            res.emplace_back(s, ystart[t]);
            xl.emplace_back(s, t);
            yl.emplace_back(t, ystart[t]);
        } else if (y.hor & bit(t)) {
            res.emplace_back(s, t);
            xl.emplace_back(s, t);
            yl.emplace_back(t, t);
        } else {
            return std::nullopt;
        }
    }
    for (auto [s, t] : y) {
        if (xend & bit(s)) continue;
        if (!(x.hor & bit(s))) return std::nullopt;
        res.emplace_back(s, t);
        xl.emplace_back(s, s);
        yl.emplace_back(s, t);
    }
    Diagram out;
    for (Mask h = x.hor & y.hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        if (p > z_.match(p)) continue;
        out.hor |= bit(p) | bit(z_.match(p));
        xl.emplace_back(p, p);
        yl.emplace_back(p, p);
    }
    auto rl = res;
    for (Mask h = out.hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        if (p < z_.match(p)) rl.emplace_back(p, p);
    }
    if (crossings(xl) + crossings(yl) != crossings(rl)) return std::nullopt;
    for (auto [s, t] : res) out.push(s, t);
    out.canonicalize();
    if (mult_one_ && !multiplicity_one(out)) return std::nullopt;
    return out;
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            if (auto p = mul(x, y)) out.add(*p);
    return out;
}

Element Algebra::d(const Diagram& a) const {
    Element out;
    std::vector<std::pair<int, int>> mv(a.begin(), a.end()), low;
    for (Mask h = a.hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        if (p < z_.match(p)) low.emplace_back(p, p);
    }
    auto with = [](std::vector<std::pair<int, int>> v, const std::vector<std::pair<int, int>>& extra) {
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
    };
    int base = crossings(with(mv, low));
    for (std::size_t i = 0; i < mv.size(); ++i)
        for (std::size_t j = i + 1; j < mv.size(); ++j) {
            auto [s1, t1] = mv[i];
            auto [s2, t2] = mv[j];
            if (s1 > s2) std::swap(s1, s2), std::swap(t1, t2);
            if (!(t1 > t2)) continue;
            std::vector<std::pair<int, int>> nv;
            for (std::size_t m = 0; m < mv.size(); ++m)
                if (m != i && m != j) nv.push_back(mv[m]);
            nv.emplace_back(s1, t2);
            nv.emplace_back(s2, t1);
            if (crossings(with(nv, low)) != base - 1) continue;
            Diagram r;
            r.hor = a.hor;
            for (auto [s, t] : nv) r.push(s, t);
            r.canonicalize();
            out.add(r);
        }
    for (std::size_t i = 0; i < mv.size(); ++i) {
        auto [s, t] = mv[i];
        for (Mask h = a.hor; h; h &= h - 1) {
            int p = std::countr_zero(h);
            if (!(s < p && p < t)) continue;
            int q = z_.match(p);
            std::vector<std::pair<int, int>> others;
            for (auto lp : low)
                if (lp.first != std::min(p, q)) others.push_back(lp);
            auto before = with(mv, others);
            before.emplace_back(p, p);
            std::vector<std::pair<int, int>> nv;
            for (std::size_t m = 0; m < mv.size(); ++m)
                if (m != i) nv.push_back(mv[m]);
            nv.emplace_back(s, p);
            nv.emplace_back(p, t);
            if (crossings(with(nv, others)) != crossings(before) - 1) continue;
            Diagram r;
            r.hor = a.hor & ~(bit(p) | bit(q));
            for (auto [x, y] : nv) r.push(x, y);
            r.canonicalize();
            out.add(r);
        }
    }
    return out;
}

Element Algebra::d(const Element& a) const {
    Element out;
    for (const auto& x : a.terms()) out += d(x);
    return out;
}

std::optional<Diagram> Algebra::chord(Idem i, int s, int t) const {
    int ps = z_.pair(s);
    if (!(i & bit(ps))) return std::nullopt;
    Diagram d = idempotent(i & ~bit(ps));
    d.push(s, t);
    if (!valid(d)) return std::nullopt;
    return d;
}

std::vector<Diagram> enumerate_generators(const Pmc& z) {
    const int n = z.n(), k = z.genus();
    std::vector<Diagram> out;
    Diagram cur;
    auto ps = z.pairs();
    // choose horizontal pairs among the pairs untouched by moving strands
    auto finish = [&](Mask touched) {
        int need = k - cur.nm;
        std::vector<int> free;
        for (auto [a, b] : ps)
            if (!(touched & (bit(a) | bit(b)))) free.push_back(a);
        if (need < 0 || need > static_cast<int>(free.size())) return;
        std::vector<int> pick(need);
        auto rec = [&](auto&& self, int from, int depth) -> void {
            if (depth == need) {
                Diagram d = cur;
                for (int p : pick) d.hor |= bit(p) | bit(z.match(p));
                out.push_back(d);
                return;
            }
            for (int j = from; j < static_cast<int>(free.size()); ++j) {
                pick[depth] = free[j];
                self(self, j + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    };
    auto dfs = [&](auto&& self, int p, Mask sp, Mask ep, Mask touched) -> void {
        if (p > n) {
            finish(touched);
            return;
        }
        self(self, p + 1, sp, ep, touched);
        if (cur.nm >= k || (sp & bit(z.pair(p)))) return;
        for (int t = p + 1; t <= n; ++t) {
            if (ep & bit(z.pair(t))) continue;
            cur.push(p, t);
            self(self, p + 1, sp | bit(z.pair(p)), ep | bit(z.pair(t)), touched | bit(p) | bit(t));
            --cur.nm;
        }
    };
    dfs(dfs, 1, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagram> Algebra::basis() const {
    auto all = enumerate_generators(z_);
    if (!mult_one_) return all;
    std::vector<Diagram> out;
    for (auto& d : all)
        if (multiplicity_one(d)) out.push_back(d);
    return out;
}

std::vector<int> multiplicity_vector(const Pmc& z, const Diagram& d) {
    std::vector<int> m(z.n() - 1, 0);
    for (auto [s, t] : d)
        for (int i = s; i < t; ++i) ++m[i - 1];
    return m;
}

bool multiplicity_one(const Diagram& d) {
    Mask cover = 0;
    for (auto [s, t] : d) {
        Mask seg = (bit(t) - 1) & ~(bit(s) - 1);  // segments s..t-1
        if (cover & seg) return false;
        cover |= seg;
    }
    return true;
}

Diagram tau_act(const RealPmc& r, const Diagram& d) {
    Diagram out;
    for (auto [s, t] : d) out.push(r.tau(t), r.tau(s));
    for (Mask h = d.hor; h; h &= h - 1) out.hor |= bit(r.tau(std::countr_zero(h)));
    out.canonicalize();
    return out;
}

bool is_symmetric(const RealPmc& r, const Diagram& d) { return tau_act(r, d) == d; }

Idem tau_idem(const Pmc& z, Idem i) {
    Idem out = 0;
    for (Mask m = i; m; m &= m - 1) out |= bit(z.pair(z.tau(std::countr_zero(m))));
    return out;
}

std::vector<Diagram> symmetric_generators(const RealPmc& r) {
    std::vector<Diagram> out;
    for (auto& d : enumerate_generators(r.pmc()))
        if (is_symmetric(r, d)) out.push_back(d);
    return out;
}

Diagram mirror_antihom(const Pmc& half, const Diagram& d) {
    Diagram out;
    for (auto [s, t] : d) out.push(half.tau(t), half.tau(s));
    for (Mask h = d.hor; h; h &= h - 1) out.hor |= bit(half.tau(std::countr_zero(h)));
    out.canonicalize();
    return out;
}

std::string Algebra::str(const Diagram& d) const {
    std::vector<std::pair<int, int>> all(d.begin(), d.end());
    for (Mask h = d.hor; h; h &= h - 1) {
        int p = std::countr_zero(h);
        all.emplace_back(p, p);
    }
    std::sort(all.begin(), all.end());
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < all.size(); ++i) os << (i ? "," : "") << '[' << all[i].first << ',' << all[i].second << ']';
    os << '}';
    return os.str();
}

std::string Algebra::idem_str(Idem i) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Mask m = i; m; m &= m - 1) {
        int p = std::countr_zero(m);
        os << (first ? "" : ",") << p << '-' << z_.match(p);
        first = false;
    }
    os << '}';
    return os.str();
}

std::string Algebra::name(const Diagram& d) const {
    static const Pmc t = split_pmc(1);
    if (z_ != t) return str(d);
    if (d.nm == 0) return d.hor == (bit(1) | bit(3)) ? "ι0" : d.hor == (bit(2) | bit(4)) ? "ι1" : str(d);
    if (d.nm != 1 || d.hor) return str(d);
    std::string s = "ρ";
    for (int p = d.mov[0].first; p < d.mov[0].second; ++p) s += char('0' + p);
    return s;
}

Diagram Algebra::parse(const std::string& text) const {
    std::string s = text;
    auto strip = [&](const std::string& pre) {
        if (s.rfind(pre, 0) == 0) {
            s = s.substr(pre.size());
            return true;
        }
        return false;
    };
    if (strip("ρ") || strip("rho")) {
        return rho(s);
    }
    if (strip("ι") || strip("iota")) return iota(std::stoi(s));
    Diagram d;
    std::size_t pos = 0;
    while ((pos = s.find('[', pos)) != std::string::npos) {
        auto close = s.find(']', pos);
        auto comma = s.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw Error("ParseError", "bad strand in '" + text + "'");
        int a = std::stoi(s.substr(pos + 1, comma - pos - 1));
        int b = std::stoi(s.substr(comma + 1, close - comma - 1));
        if (a < 1 || b < 1 || a > z_.n() || b > z_.n()) throw Error("ParseError", "point out of range in '" + text + "'");
        if (a == b)
            d.hor |= bit(a);
        else
            d.push(a, b);
        pos = close + 1;
    }
    d.canonicalize();
    if (!valid(d)) throw Error("ValidationError", "InvalidDiagram " + text);
    return d;
}

const Algebra& torus_algebra() {
    static const Algebra a(split_pmc(1));
    return a;
}

Diagram rho(const std::string& digits) {
    if (digits.empty()) throw Error("ParseError", "empty chord");
    int s = digits.front() - '0', t = digits.back() - '0' + 1;
    for (std::size_t i = 1; i < digits.size(); ++i)
        if (digits[i] - '0' != s + static_cast<int>(i)) throw Error("ParseError", "non-consecutive chord " + digits);
    if (s < 1 || t > 4) throw Error("ParseError", "chord out of range " + digits);
    Diagram d;
    d.push(s, t);
    return d;
}

Idem iota_idem(int which) { return which == 0 ? bit(1) : bit(2); }

Diagram iota(int which) { return torus_algebra().idempotent(iota_idem(which)); }

}  // namespace hfr
