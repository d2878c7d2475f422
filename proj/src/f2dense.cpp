// f2dense.cpp — bit-packed row kernels, selected at runtime
#include "hfr/f2dense.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define HFR_X86 1
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#define HFR_NEON 1
#endif

namespace hfr::f2 {

namespace {

constexpr std::size_t kNone = SIZE_MAX;

void xor_scalar(std::uint64_t* d, const std::uint64_t* s, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i) d[i] ^= s[i];
}

std::size_t pop_scalar(const std::uint64_t* r, std::size_t w) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w; ++i) c += std::popcount(r[i]);
    return c;
}

std::size_t ffs_scalar(const std::uint64_t* r, std::size_t from, std::size_t w) {
    for (std::size_t i = from; i < w; ++i)
        if (r[i]) return i * 64 + std::countr_zero(r[i]);
    return kNone;
}

#ifdef HFR_X86
__attribute__((target("avx2"))) void xor_avx2(std::uint64_t* d, const std::uint64_t* s, std::size_t w) {
    std::size_t i = 0;
    for (; i + 4 <= w; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), _mm256_xor_si256(a, b));
    }
    for (; i < w; ++i) d[i] ^= s[i];
}

// nibble-table popcount (Mula), summed with sad against zero
__attribute__((target("avx2"))) std::size_t pop_avx2(const std::uint64_t* r, std::size_t w) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                         2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= w; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
        __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
        __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
    }
    std::size_t c = static_cast<std::size_t>(_mm256_extract_epi64(acc, 0) + _mm256_extract_epi64(acc, 1) +
                                             _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3));
    for (; i < w; ++i) c += std::popcount(r[i]);
    return c;
}

__attribute__((target("avx2"))) std::size_t ffs_avx2(const std::uint64_t* r, std::size_t from, std::size_t w) {
    std::size_t i = from;
    for (; i + 4 <= w; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
        if (!_mm256_testz_si256(v, v)) break;
    }
    for (; i < w; ++i)
        if (r[i]) return i * 64 + std::countr_zero(r[i]);
    return kNone;
}
#endif

#ifdef HFR_NEON
void xor_neon(std::uint64_t* d, const std::uint64_t* s, std::size_t w) {
    std::size_t i = 0;
    for (; i + 2 <= w; i += 2) vst1q_u64(d + i, veorq_u64(vld1q_u64(d + i), vld1q_u64(s + i)));
    for (; i < w; ++i) d[i] ^= s[i];
}

std::size_t pop_neon(const std::uint64_t* r, std::size_t w) {
    std::size_t c = 0, i = 0;
    for (; i + 2 <= w; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(r + i));
        c += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < w; ++i) c += std::popcount(r[i]);
    return c;
}

std::size_t ffs_neon(const std::uint64_t* r, std::size_t from, std::size_t w) {
    std::size_t i = from;
    for (; i + 2 <= w; i += 2) {
        uint64x2_t v = vld1q_u64(r + i);
        if (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) break;
    }
    for (; i < w; ++i)
        if (r[i]) return i * 64 + std::countr_zero(r[i]);
    return kNone;
}
#endif

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", xor_scalar, pop_scalar, ffs_scalar};
    return k;
}

const Kernels* avx2_kernels() {
#ifdef HFR_X86
    static const Kernels k{"avx2", xor_avx2, pop_avx2, ffs_avx2};
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &k : nullptr;
#else
    return nullptr;
#endif
}

const Kernels* neon_kernels() {
#ifdef HFR_NEON
    static const Kernels k{"neon", xor_neon, pop_neon, ffs_neon};
    return &k;
#else
    return nullptr;
#endif
}

const Kernels& best_kernels() {
    static const Kernels* pick = [] {
        const char* env = std::getenv("HFR_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
        if (auto* k = avx2_kernels()) return k;
        if (auto* k = neon_kernels()) return k;
        return &scalar_kernels();
    }();
    return *pick;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

std::size_t rank(BitMatrix& m, const Kernels& k) {
    const std::size_t w = m.words();
    std::vector<std::size_t> owner(m.cols(), kNone);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t* row = m.row(i);
        if (k.popcount(row, w) == 0) continue;
        std::size_t from = 0;
        for (;;) {
            std::size_t c = k.first_set(row, from, w);
            if (c == kNone) break;
            if (owner[c] == kNone) {
                owner[c] = i;
                ++r;
                break;
            }
            k.xor_into(row, m.row(owner[c]), w);
            from = c >> 6;
        }
    }
    return r;
}

}  // namespace hfr::f2
