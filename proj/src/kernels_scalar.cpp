#include "arcalc/kernels.hpp"

namespace arcalc {

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                 std::size_t len, std::uint32_t p) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] = (y[i] + c * x[i]) % p;  // c*x < 2^30, sum < 2^31
}

void scale_scalar(std::uint32_t* y, std::uint32_t c, std::size_t len, std::uint32_t p) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] = (c * y[i]) % p;
}

void accmul_scalar(std::uint64_t* acc, const std::uint32_t* x, std::uint32_t c,
                   std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        acc[i] += std::uint64_t(c) * x[i];
}

void reduce_scalar(std::uint32_t* y, const std::uint64_t* acc, std::size_t len,
                   std::uint32_t p) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] = std::uint32_t(acc[i] % p);
}

} // namespace

const KernelTable scalar_kernels = {"scalar", axpy_scalar, scale_scalar,
                                    accmul_scalar, reduce_scalar};

} // namespace arcalc
