// satellites.cpp — pattern fixtures, staircases, boxes, and the dimension pipeline
#include "hfr/satellites.hpp"

#include <cstdlib>

#include "hfr/error.hpp"

namespace hfr {

bool AlternatingKnotData::valid() const {
    int a = 2 * std::abs(tau) + 1;
    return det > 0 && det % 2 == 1 && det >= a && (det - a) % 4 == 0;
}

void AlternatingKnotData::require_valid() const {
    if (!valid())
        throw Error("InvariantViolation", "need odd det >= 2|tau|+1 with det = 2|tau|+1 mod 4 (det=" + std::to_string(det) +
                                              ", tau=" + std::to_string(tau) + ")");
}

int AlternatingKnotData::box_count() const { return (det - (2 * std::abs(tau) + 1)) / 4; }

namespace {

TypeD torus_d() {
    TypeD d;
    d.alg = torus_algebra();
    return d;
}

std::uint32_t gen(TypeD& d, const std::string& label, int which) { return d.add_gen(label, iota_idem(which)); }

void arrow(TypeD& d, std::uint32_t s, const char* letters, std::uint32_t t) { d.add_arrow(s, rho(letters), t); }

}  // namespace

TypeD thick_torus_cfdr() {
    TypeD d = torus_d();
    gen(d, "x", 0);
    auto y = gen(d, "y", 0);
    arrow(d, y, "12", y);
    return d;
}

TypeD whitehead_cfdr_framed() {
    TypeD d = torus_d();
    gen(d, "r", 1);
    auto s = gen(d, "s", 0);
    auto t = gen(d, "t", 1);
    arrow(d, s, "1", t);
    return d;
}

TypeD whitehead_cfdr_unframed() {
    TypeD d = torus_d();
    auto p1y = gen(d, "p1y", 0);
    auto p1x1 = gen(d, "p1x1", 1);
    auto p2x1 = gen(d, "p2x1", 1);
    auto p2x2 = gen(d, "p2x2", 1);
    gen(d, "p2y", 0);
    arrow(d, p1y, "3", p1x1);
    arrow(d, p1x1, "23", p2x1);
    arrow(d, p1y, "1", p2x2);
    d.normalize();
    return d;
}

TypeD cable21_cfdr_framed() {
    TypeD d = torus_d();
    auto x = gen(d, "x", 1);
    auto y = gen(d, "y", 0);
    arrow(d, x, "2", y);
    return d;
}

TypeD cable21_cfdr_unframed() {
    TypeD d = torus_d();
    auto p = gen(d, "p", 1);
    auto b = gen(d, "b", 0);
    auto a = gen(d, "a", 0);
    arrow(d, p, "2", b);
    arrow(d, b, "12", a);
    d.normalize();
    return d;
}

TypeD staircase_typeD(int tau) {
    TypeD d = torus_d();
    const int n = std::abs(tau);
    std::vector<std::uint32_t> v, p, q, u(2 * n + 1);
    for (int i = 0; i <= 2 * n; ++i) v.push_back(gen(d, "v" + std::to_string(i), 0));
    if (n == 0) {
        arrow(d, v[0], "12", v[0]);
        return d;
    }
    for (int i = 0; i < n; ++i) {
        p.push_back(gen(d, "p" + std::to_string(i), 1));
        q.push_back(gen(d, "q" + std::to_string(i), 1));
    }
    for (int j = 1; j <= 2 * n; ++j) u[j] = gen(d, "u" + std::to_string(j), 1);
    if (tau > 0) {
        for (int i = 0; i < n; ++i) {
            arrow(d, v[2 * i + 1], "3", q[i]);
            arrow(d, q[i], "2", v[2 * i]);
            arrow(d, v[2 * i + 1], "1", p[i]);
            arrow(d, v[2 * i + 2], "123", p[i]);
        }
        arrow(d, v[0], "1", u[1]);
        for (int j = 1; j < 2 * n; ++j) arrow(d, u[j + 1], "23", u[j]);
        arrow(d, v[2 * n], "3", u[2 * n]);
    } else {
        for (int i = 0; i < n; ++i) {
            arrow(d, v[2 * i], "1", p[i]);
            arrow(d, v[2 * i + 1], "123", p[i]);
            arrow(d, v[2 * i + 2], "3", q[i]);
            arrow(d, q[i], "2", v[2 * i + 1]);
        }
        arrow(d, v[2 * n], "123", u[1]);
        for (int j = 1; j < 2 * n; ++j) arrow(d, u[j], "23", u[j + 1]);
        arrow(d, u[2 * n], "2", v[0]);
    }
    d.normalize();
    return d;
}

TypeD box_typeD() {
    TypeD d = torus_d();
    auto b00 = gen(d, "b00", 0), b20 = gen(d, "b20", 0), b02 = gen(d, "b02", 0), b22 = gen(d, "b22", 0);
    auto c10 = gen(d, "c10", 1), c01 = gen(d, "c01", 1), c21 = gen(d, "c21", 1), c12 = gen(d, "c12", 1);
    arrow(d, b22, "3", c12);
    arrow(d, b20, "3", c10);
    arrow(d, b22, "1", c21);
    arrow(d, b02, "1", c01);
    arrow(d, c12, "2", b02);
    arrow(d, c10, "2", b00);
    arrow(d, b00, "123", c01);
    arrow(d, b20, "123", c21);
    d.normalize();
    return d;
}

TypeA typeA_from_typeD(const TypeD& d, std::size_t max_inputs) {
    static const std::vector<std::pair<const char*, std::vector<const char*>>> letters = {
        {"1", {"3"}}, {"2", {"2"}}, {"3", {"1"}}, {"12", {"3", "2"}}, {"23", {"2", "1"}}, {"123", {"3", "2", "1"}}};
    TypeA m;
    m.alg = d.alg;
    m.gens = d.gens;
    for (const auto& a : d.arrows) {
        if (a.coef.is_idempotent()) {
            m.add_action(a.src, {}, a.tgt);
            continue;
        }
        bool found = false;
        for (const auto& [from, to] : letters)
            if (a.coef == rho(from)) {
                std::vector<Diagram> in;
                for (const char* l : to) in.push_back(rho(l));
                m.add_action(a.src, in, a.tgt);
                found = true;
            }
        if (!found) throw Error("ValidationError", "coefficient outside the torus algebra letters");
    }
    return close_actions(m, max_inputs);
}

namespace {

std::size_t input_cap(int tau) { return 3 + 2 * static_cast<std::size_t>(std::abs(tau)); }

}  // namespace

TypeA staircase_typeA(int tau) { return typeA_from_typeD(staircase_typeD(tau), input_cap(tau)); }

TypeA box_typeA() { return typeA_from_typeD(box_typeD(), input_cap(1)); }

Pattern parse_pattern(const std::string& s) {
    if (s == "whitehead") return Pattern::Whitehead;
    if (s == "cable21" || s == "cable") return Pattern::Cable21;
    throw Error("UsageError", "unknown pattern '" + s + "' (whitehead | cable21)");
}

const char* pattern_name(Pattern p) { return p == Pattern::Whitehead ? "whitehead" : "cable21"; }

TypeD framed_pattern(Pattern p) { return p == Pattern::Whitehead ? whitehead_cfdr_framed() : cable21_cfdr_framed(); }

std::size_t hfr_satellite_dim(Pattern p, const AlternatingKnotData& k) {
    k.require_valid();
    TypeD pat = framed_pattern(p);
    std::size_t total = homology_dim(box_AD(staircase_typeA(k.tau), pat));
    int boxes = k.box_count();
    if (boxes > 0) total += static_cast<std::size_t>(boxes) * homology_dim(box_AD(box_typeA(), pat));
    return total;
}

namespace {

int sgn_case(int tau, int pos, int zero, int neg) { return tau > 0 ? pos : (tau == 0 ? zero : neg); }

std::size_t nat(long v) {
    if (v < 0) throw Error("InvariantViolation", "closed form went negative");
    return static_cast<std::size_t>(v);
}

}  // namespace

std::size_t oracle_hfr_whitehead(const AlternatingKnotData& k) {
    k.require_valid();
    long a = std::abs(k.tau);
    return nat(k.tau > 0 ? 2L * k.det + 4 * a - 3 : 2L * k.det + 4 * a - 1);
}

std::size_t oracle_hf_whitehead(const AlternatingKnotData& k) {
    k.require_valid();
    long d = k.det, a = std::abs(k.tau);
    return nat(d * d + 12 * a + sgn_case(k.tau, -6, 0, -4));
}

std::size_t oracle_hfr_cable(const AlternatingKnotData& k) {
    k.require_valid();
    long a = std::abs(k.tau);
    return nat(k.tau >= 0 ? k.det + 2 * a : k.det + 2 * a - 2);
}

std::size_t oracle_hf_cable(const AlternatingKnotData& k) {
    k.require_valid();
    long d = k.det, a = std::abs(k.tau);
    return nat((d * d + 12 * a + sgn_case(k.tau, -7, 1, -3)) / 2);
}

std::size_t oracle_hf_surgery_one(const AlternatingKnotData& k) {
    k.require_valid();
    long a = std::abs(k.tau);
    return nat((k.det + 6 * a + sgn_case(k.tau, -7, 1, -3)) / 2);
}

std::size_t oracle_hf_surgery_half(const AlternatingKnotData& k) {
    k.require_valid();
    long a = std::abs(k.tau);
    return nat(k.det + 6 * a + sgn_case(k.tau, -6, 0, -4));
}

const std::vector<Fixture>& type_d_fixtures() {
    static const std::vector<Fixture> f = {
        {"thick_torus", thick_torus_cfdr},
        {"whitehead_framed", whitehead_cfdr_framed},
        {"whitehead_unframed", whitehead_cfdr_unframed},
        {"cable21_framed", cable21_cfdr_framed},
        {"cable21_unframed", cable21_cfdr_unframed},
        {"box", box_typeD},
        {"staircase+1", [] { return staircase_typeD(1); }},
        {"staircase-1", [] { return staircase_typeD(-1); }},
        {"staircase+2", [] { return staircase_typeD(2); }},
        {"staircase-2", [] { return staircase_typeD(-2); }},
        {"staircase0", [] { return staircase_typeD(0); }},
    };
    return f;
}

}  // namespace hfr
