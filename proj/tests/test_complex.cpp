// test_complex.cpp — F2 homology, sparse against bit-packed, kernel equivalence
#include <doctest.h>

#include <random>

#include "hfr/complex.hpp"
#include "hfr/error.hpp"
#include "hfr/f2dense.hpp"

using namespace hfr;

namespace {

// `loose` free generators plus `pairs` cancelling pairs, then scrambled by
// random conjugation; the homology is known to be `loose`
ChainComplex scrambled(std::mt19937_64& rng, std::size_t loose, std::size_t pairs) {
    std::size_t n = loose + 2 * pairs;
    std::vector<std::vector<char>> d(n, std::vector<char>(n, 0));  // d[row][col]
    for (std::size_t i = 0; i < pairs; ++i) d[loose + 2 * i + 1][loose + 2 * i] = 1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t step = 0; step < 4 * n; ++step) {
        std::size_t x = pick(rng), y = pick(rng);
        if (x == y) continue;
        // P = 1 + e_xy: rows first, then columns
        for (std::size_t c = 0; c < n; ++c) d[x][c] ^= d[y][c];
        for (std::size_t r = 0; r < n; ++r) d[r][y] ^= d[r][x];
    }
    ChainComplex cc;
    for (std::size_t i = 0; i < n; ++i) cc.basis.push_back("g" + std::to_string(i));
    cc.boundary.assign(n, {});
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (d[r][c]) cc.add_arrow(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r));
    return cc;
}

}  // namespace

TEST_SUITE("complex") {
    TEST_CASE("homology of scrambled complexes") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            std::size_t loose = rng() % 12, pairs = rng() % 40;
            auto c = scrambled(rng, loose, pairs);
            REQUIRE(verify_d_squared(c));
            CHECK(homology_dim(c) == loose);
            CHECK(homology_dim_dense(c) == loose);
        }
    }

    TEST_CASE("nonzero square is reported") {
        ChainComplex c;
        c.basis = {"a", "b", "c"};
        c.boundary.assign(3, {});
        c.add_arrow(0, 1);
        c.add_arrow(1, 2);
        CHECK_FALSE(verify_d_squared(c));
        CHECK_THROWS_AS(homology_dim(c), Error);
    }

    TEST_CASE("SIMD kernels agree with the scalar reference") {
        std::vector<const f2::Kernels*> ks = {&f2::scalar_kernels()};
        if (auto* k = f2::avx2_kernels()) ks.push_back(k);
        if (auto* k = f2::neon_kernels()) ks.push_back(k);
        MESSAGE("kernels under test: " << ks.size() << ", runtime choice " << f2::best_kernels().name);
        std::mt19937_64 rng(5);
        for (std::size_t words : {1, 3, 4, 5, 8, 13, 64}) {
            std::vector<std::uint64_t> a(words), b(words);
            for (auto& w : a) w = rng();
            for (auto& w : b) w = rng() & rng();
            auto ref = a;
            f2::scalar_kernels().xor_into(ref.data(), b.data(), words);
            for (auto* k : ks) {
                auto got = a;
                k->xor_into(got.data(), b.data(), words);
                CHECK(got == ref);
                CHECK(k->popcount(a.data(), words) == f2::scalar_kernels().popcount(a.data(), words));
                std::vector<std::uint64_t> sparse(words, 0);
                sparse[words - 1] = 1ull << 17;
                for (std::size_t from = 0; from < words; ++from)
                    CHECK(k->first_set(sparse.data(), from, words) == (words - 1) * 64 + 17);
                std::vector<std::uint64_t> zero(words, 0);
                CHECK(k->first_set(zero.data(), 0, words) == SIZE_MAX);
            }
        }
        for (int t = 0; t < 50; ++t) {
            std::size_t r = 1 + rng() % 300, c = 1 + rng() % 300;
            f2::BitMatrix m(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (rng() % 7 == 0) m.set(i, j);
            auto m0 = m;
            std::size_t want = f2::rank(m0, f2::scalar_kernels());
            for (auto* k : ks) {
                auto mk = m;
                CHECK(f2::rank(mk, *k) == want);
            }
        }
    }
}
