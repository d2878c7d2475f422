// pmc.cpp
#include "hfr/pmc.hpp"

#include <algorithm>
#include <sstream>

#include "hfr/error.hpp"

namespace hfr {

namespace {

// Boundary components after surgery: walk arc (p, p+1), jump across the
// handle at p+1 and continue on the arc starting at its partner.
int surgery_circles(int n, const std::vector<int>& m) {
    std::vector<char> seen(n + 1, 0);
    int cycles = 0;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int a = s; !seen[a]; a = m[a % n + 1]) seen[a] = 1;
    }
    return cycles;
}

}  // namespace

Pmc Pmc::make(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n <= 0 || n % 4 != 0) throw Error("BadCount", "point count " + std::to_string(n) + " is not 4k");
    if (n > kMaxPoints) throw Error("BadCount", "at most " + std::to_string(kMaxPoints) + " points supported");
    std::vector<int> m(n + 1, 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n) throw Error("BadCount", "point out of range");
        if (a == b) throw Error("NotFixedPointFree", "point " + std::to_string(a) + " matched to itself");
        if (m[a] || m[b]) throw Error("NotFixedPointFree", "point matched twice");
        m[a] = b;
        m[b] = a;
    }
    for (int p = 1; p <= n; ++p)
        if (!m[p]) throw Error("NotFixedPointFree", "point " + std::to_string(p) + " unmatched");
    if (surgery_circles(n, m) != 1) throw Error("NotConnectedAfterSurgery", "");
    Pmc z;
    z.n_ = n;
    z.m_ = std::move(m);
    return z;
}

std::vector<std::pair<int, int>> Pmc::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= n_; ++p)
        if (p < m_[p]) out.emplace_back(p, m_[p]);
    return out;
}

std::string Pmc::str() const {
    std::ostringstream os;
    os << n_ << ";[";
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) os << ',';
        first = false;
        os << a << '-' << b;
    }
    os << ']';
    return os.str();
}

Pmc split_pmc(int k) {
    if (k < 1) throw Error("BadCount", "genus must be positive");
    std::vector<std::pair<int, int>> ps;
    for (int j = 0; j < k; ++j) {
        ps.emplace_back(4 * j + 1, 4 * j + 3);
        ps.emplace_back(4 * j + 2, 4 * j + 4);
    }
    return Pmc::make(4 * k, ps);
}

Pmc antipodal_pmc(int k) {
    if (k < 1) throw Error("BadCount", "genus must be positive");
    std::vector<std::pair<int, int>> ps;
    for (int i = 1; i <= 2 * k; ++i) ps.emplace_back(i, i + 2 * k);
    return Pmc::make(4 * k, ps);
}

RealPmc realify(const Pmc& z) {
    for (int p = 1; p <= z.n(); ++p)
        if (z.match(z.tau(p)) != z.tau(z.match(p)))
            throw Error("NotSymmetric", "matching does not commute with the reflection at point " + std::to_string(p));
    RealPmc r;
    r.z_ = z;
    return r;
}

bool quotient_orientable(const RealPmc& r) {
    const Pmc& z = r.pmc();
    int h = z.n() / 2;
    for (int p = 1; p <= h; ++p)
        if (z.match(p) > h) return false;
    return true;
}

Pmc reverse(const Pmc& z) {
    std::vector<std::pair<int, int>> ps;
    for (auto [a, b] : z.pairs()) ps.emplace_back(z.tau(a), z.tau(b));
    return Pmc::make(z.n(), ps);
}

Pmc half_pmc(const RealPmc& r) {
    if (!quotient_orientable(r)) throw Error("NonorientableQuotient", "matching does not preserve the half circle");
    const Pmc& z = r.pmc();
    std::vector<std::pair<int, int>> ps;
    for (auto [a, b] : z.pairs())
        if (b <= z.n() / 2) ps.emplace_back(a, b);
    return Pmc::make(z.n() / 2, ps);
}

Pmc parse_pmc(const std::string& s) {
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string fam = s.substr(0, colon);
        int k = 0;
        try {
            k = std::stoi(s.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error("ParseError", "bad genus in '" + s + "'");
        }
        if (fam == "split") return split_pmc(k);
        if (fam == "antipodal") return antipodal_pmc(k);
        throw Error("ParseError", "unknown family '" + fam + "'");
    }
    auto semi = s.find(';');
    if (semi == std::string::npos) throw Error("ParseError", "expected 'family:k' or 'n;[a-b,...]'");
    int n = 0;
    std::vector<std::pair<int, int>> ps;
    try {
        n = std::stoi(s.substr(0, semi));
        std::string body = s.substr(semi + 1);
        body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
                   body.end());
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw Error("ParseError", "bad pair '" + tok + "'");
            ps.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("ParseError", "malformed pair list '" + s + "'");
    }
    return Pmc::make(n, ps);
}

}  // namespace hfr
