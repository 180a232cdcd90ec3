#include "arcalc/kernels.hpp"

#if defined(ARCALC_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace arcalc {

namespace {

// High 32 bits of the lanewise 32x32 -> 64 product.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    __m256i even = _mm256_mul_epu32(a, b);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    even = _mm256_srli_epi64(even, 32);
    odd = _mm256_andnot_si256(_mm256_set1_epi64x(0xffffffffu), odd);
    return _mm256_or_si256(even, odd);
}

// Barrett reduction of t < 2^31 with m = floor(2^32/p): the estimate
// q = floor(t*m / 2^32) satisfies t - q*p < 2p, so one conditional
// subtraction produces the canonical residue.
inline __m256i barrett31(__m256i t, __m256i m, __m256i vp) {
    __m256i q = mulhi_epu32(t, m);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
               std::size_t len, std::uint32_t p) {
    const __m256i vc = _mm256_set1_epi32((int)c);
    const __m256i vp = _mm256_set1_epi32((int)p);
    const __m256i vm = _mm256_set1_epi32((int)(std::uint32_t)(0x100000000ull / p));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i vy = _mm256_loadu_si256((const __m256i*)(y + i));
        __m256i vx = _mm256_loadu_si256((const __m256i*)(x + i));
        __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(vc, vx));
        _mm256_storeu_si256((__m256i*)(y + i), barrett31(t, vm, vp));
    }
    for (; i < len; ++i)
        y[i] = (y[i] + c * x[i]) % p;
}

void scale_avx2(std::uint32_t* y, std::uint32_t c, std::size_t len, std::uint32_t p) {
    const __m256i vc = _mm256_set1_epi32((int)c);
    const __m256i vp = _mm256_set1_epi32((int)p);
    const __m256i vm = _mm256_set1_epi32((int)(std::uint32_t)(0x100000000ull / p));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i vy = _mm256_loadu_si256((const __m256i*)(y + i));
        __m256i t = _mm256_mullo_epi32(vc, vy);
        _mm256_storeu_si256((__m256i*)(y + i), barrett31(t, vm, vp));
    }
    for (; i < len; ++i)
        y[i] = (c * y[i]) % p;
}

void accmul_avx2(std::uint64_t* acc, const std::uint32_t* x, std::uint32_t c,
                 std::size_t len) {
    const __m256i vc = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256i va = _mm256_loadu_si256((const __m256i*)(acc + i));
        __m256i vx = _mm256_cvtepu32_epi64(_mm_loadu_si128((const __m128i*)(x + i)));
        va = _mm256_add_epi64(va, _mm256_mul_epu32(vc, vx));
        _mm256_storeu_si256((__m256i*)(acc + i), va);
    }
    for (; i < len; ++i)
        acc[i] += std::uint64_t(c) * x[i];
}

void reduce_avx2(std::uint32_t* y, const std::uint64_t* acc, std::size_t len,
                 std::uint32_t p) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] = std::uint32_t(acc[i] % p);
}

} // namespace

const KernelTable avx2_kernels = {"avx2", axpy_avx2, scale_avx2,
                                  accmul_avx2, reduce_avx2};

bool cpu_supports_avx2() { return __builtin_cpu_supports("avx2"); }

} // namespace arcalc

#endif // ARCALC_HAVE_AVX2_KERNELS
