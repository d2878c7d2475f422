// hfr/f2dense.hpp — bit-packed F2 rows with scalar and SIMD kernels
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hfr::f2 {

struct Kernels {
    const char* name;
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    std::size_t (*popcount)(const std::uint64_t* row, std::size_t words);
    // index of the first set bit at or after word `from`, or SIZE_MAX
    std::size_t (*first_set)(const std::uint64_t* row, std::size_t from, std::size_t words);
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // null when not compiled in or not supported
const Kernels* neon_kernels();
const Kernels& best_kernels();  // runtime choice

class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }
    void set(std::size_t r, std::size_t c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }
    bool get(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

// destroys m
std::size_t rank(BitMatrix& m, const Kernels& k = best_kernels());

}  // namespace hfr::f2
