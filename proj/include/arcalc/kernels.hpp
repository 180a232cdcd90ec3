#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace arcalc {

// Hot inner loops of the GF(p) matrix code, p < 2^15.  Each operation has a
// scalar reference implementation plus data-parallel variants (AVX2
// intrinsics on x86-64, std::experimental::simd elsewhere); the active table
// is chosen once at runtime from CPU capabilities and can be overridden with
// the ARCALC_KERNELS environment variable ("scalar", "stdsimd", "avx2").
// All variants compute identical canonical residues; the test suite checks
// them against the scalar reference on shared inputs.
struct KernelTable {
    const char* name;

    // y[i] <- (y[i] + c*x[i]) mod p.  Requires c < p, entries < p.
    void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                 std::size_t len, std::uint32_t p);

    // y[i] <- (c*y[i]) mod p.
    void (*scale)(std::uint32_t* y, std::uint32_t c, std::size_t len, std::uint32_t p);

    // acc[i] += (uint64)c * x[i], no reduction.  Safe for ~2^33 accumulations.
    void (*accmul)(std::uint64_t* acc, const std::uint32_t* x, std::uint32_t c,
                   std::size_t len);

    // y[i] <- acc[i] mod p.
    void (*reduce)(std::uint32_t* y, const std::uint64_t* acc, std::size_t len,
                   std::uint32_t p);
};

// The runtime-selected table.
const KernelTable& kernels();

// All tables compiled into this binary (scalar first).  Used by the
// equivalence tests.
const std::vector<const KernelTable*>& all_kernel_tables();

// Force a specific variant ("auto" restores CPU-based selection).
// Returns false if the variant is unavailable.
bool select_kernels(std::string_view name);

extern const KernelTable scalar_kernels;
#if defined(ARCALC_HAVE_AVX2_KERNELS)
extern const KernelTable avx2_kernels;
bool cpu_supports_avx2();
#endif
#if defined(ARCALC_HAVE_STD_SIMD)
extern const KernelTable stdsimd_kernels;
#endif

} // namespace arcalc
