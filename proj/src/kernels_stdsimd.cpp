#include "arcalc/kernels.hpp"

#if defined(ARCALC_HAVE_STD_SIMD)

#include <experimental/simd>

namespace arcalc {

namespace {

namespace stdx = std::experimental;

constexpr int W = 8;
using u32v = stdx::fixed_size_simd<std::uint32_t, W>;
using u64v = stdx::fixed_size_simd<std::uint64_t, W>;

// t < 2^31 reduced mod p through the 64-bit product with floor(2^32/p);
// same estimate-plus-one-correction scheme as the AVX2 variant.
inline u32v barrett31(const u32v& t, std::uint64_t m, std::uint32_t p) {
    u64v wide = stdx::static_simd_cast<u64v>(t);
    u64v q = (wide * m) >> 32;
    u32v r = t - stdx::static_simd_cast<u32v>(q) * p;
    stdx::where(r >= p, r) = r - p;
    return r;
}

void axpy_stdsimd(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                  std::size_t len, std::uint32_t p) {
    const std::uint64_t m = 0x100000000ull / p;
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
        u32v vy(&y[i], stdx::element_aligned);
        u32v vx(&x[i], stdx::element_aligned);
        u32v t = vy + vx * c;
        barrett31(t, m, p).copy_to(&y[i], stdx::element_aligned);
    }
    for (; i < len; ++i)
        y[i] = (y[i] + c * x[i]) % p;
}

void scale_stdsimd(std::uint32_t* y, std::uint32_t c, std::size_t len, std::uint32_t p) {
    const std::uint64_t m = 0x100000000ull / p;
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
        u32v vy(&y[i], stdx::element_aligned);
        barrett31(vy * c, m, p).copy_to(&y[i], stdx::element_aligned);
    }
    for (; i < len; ++i)
        y[i] = (c * y[i]) % p;
}

void accmul_stdsimd(std::uint64_t* acc, const std::uint32_t* x, std::uint32_t c,
                    std::size_t len) {
    std::size_t i = 0;
    for (; i + W <= len; i += W) {
        u32v vx(&x[i], stdx::element_aligned);
        u64v va(&acc[i], stdx::element_aligned);
        va += stdx::static_simd_cast<u64v>(vx) * std::uint64_t(c);
        va.copy_to(&acc[i], stdx::element_aligned);
    }
    for (; i < len; ++i)
        acc[i] += std::uint64_t(c) * x[i];
}

void reduce_stdsimd(std::uint32_t* y, const std::uint64_t* acc, std::size_t len,
                    std::uint32_t p) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] = std::uint32_t(acc[i] % p);
}

} // namespace

const KernelTable stdsimd_kernels = {"stdsimd", axpy_stdsimd, scale_stdsimd,
                                     accmul_stdsimd, reduce_stdsimd};

} // namespace arcalc

#endif // ARCALC_HAVE_STD_SIMD
