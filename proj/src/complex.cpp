// complex.cpp
#include "hfr/complex.hpp"

#include <algorithm>
#include <iterator>

#include "hfr/error.hpp"
#include "hfr/f2dense.hpp"

namespace hfr {

namespace {

using Col = std::vector<std::uint32_t>;

void toggle(Col& c, std::uint32_t v) {
    auto it = std::lower_bound(c.begin(), c.end(), v);
    if (it != c.end() && *it == v)
        c.erase(it);
    else
        c.insert(it, v);
}

Col sym_diff(const Col& a, const Col& b) {
    Col out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

void ChainComplex::add_arrow(std::uint32_t from, std::uint32_t to) { toggle(boundary.at(from), to); }

bool verify_d_squared(const ChainComplex& c) {
    for (const auto& col : c.boundary) {
        Col acc;
        for (auto y : col) acc = sym_diff(acc, c.boundary[y]);
        if (!acc.empty()) return false;
    }
    return true;
}

// column reduction, pivot = smallest row index of a reduced column
std::size_t rank_sparse(const ChainComplex& c) {
    std::vector<Col> cols = c.boundary;
    std::vector<std::int64_t> owner(c.size(), -1);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Col& col = cols[j];
        while (!col.empty()) {
            auto piv = col.front();
            if (owner[piv] < 0) {
                owner[piv] = static_cast<std::int64_t>(j);
                ++r;
                break;
            }
            col = sym_diff(col, cols[owner[piv]]);
        }
    }
    return r;
}

std::size_t homology_dim(const ChainComplex& c) {
    if (!verify_d_squared(c)) throw Error("DSquaredNonzero", "");
    return c.size() - 2 * rank_sparse(c);
}

std::size_t homology_dim_dense(const ChainComplex& c) {
    f2::BitMatrix m(c.size(), c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (auto i : c.boundary[j]) m.set(j, i);
    return c.size() - 2 * f2::rank(m);
}

}  // namespace hfr
