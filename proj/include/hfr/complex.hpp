// hfr/complex.hpp — finite F2 chain complexes
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hfr {

struct ChainComplex {
    std::vector<std::string> basis;
    // boundary[j] = sorted row indices of the boundary of generator j
    std::vector<std::vector<std::uint32_t>> boundary;

    std::size_t size() const { return basis.size(); }
    void add_arrow(std::uint32_t from, std::uint32_t to);  // toggles the entry
};

bool verify_d_squared(const ChainComplex& c);
std::size_t rank_sparse(const ChainComplex& c);
std::size_t homology_dim(const ChainComplex& c);        // sparse elimination
std::size_t homology_dim_dense(const ChainComplex& c);  // bit-packed elimination

}  // namespace hfr
