// hfr/pmc.hpp — pointed matched circles and their real refinements
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hfr {

// Points are 1..n counted away from the basepoint. n = 4k, at most 60.
class Pmc {
public:
    static constexpr int kMaxPoints = 60;

    Pmc() = default;
    static Pmc make(int n, const std::vector<std::pair<int, int>>& pairs);

    int n() const { return n_; }
    int genus() const { return n_ / 4; }
    int match(int p) const { return m_[p]; }
    int tau(int p) const { return n_ + 1 - p; }
    // lower point of the pair containing p; used as the pair's name
    int pair(int p) const { return p < m_[p] ? p : m_[p]; }
    std::vector<std::pair<int, int>> pairs() const;

    // "4k;[a-b,c-d,...]"
    std::string str() const;

    bool operator==(const Pmc& o) const { return n_ == o.n_ && m_ == o.m_; }
    bool operator!=(const Pmc& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<int> m_;  // size n+1, m_[0] unused
};

class RealPmc {
public:
    const Pmc& pmc() const { return z_; }
    int genus() const { return z_.genus(); }
    int tau(int p) const { return z_.tau(p); }
    friend RealPmc realify(const Pmc& z);

private:
    Pmc z_;
};

Pmc split_pmc(int k);
Pmc antipodal_pmc(int k);
RealPmc realify(const Pmc& z);
bool quotient_orientable(const RealPmc& r);
Pmc reverse(const Pmc& z);

// the half circle 1..2k with the restricted matching (orientable quotient only)
Pmc half_pmc(const RealPmc& r);

// "split:k", "antipodal:k" or "4k;[1-3,2-4,...]"
Pmc parse_pmc(const std::string& s);

}  // namespace hfr
