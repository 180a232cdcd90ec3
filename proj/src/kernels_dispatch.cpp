#include "arcalc/kernels.hpp"

#include <cstdlib>
#include <string>

namespace arcalc {

namespace {

const KernelTable* pick_default() {
#if defined(ARCALC_HAVE_AVX2_KERNELS)
    if (cpu_supports_avx2()) return &avx2_kernels;
#endif
#if defined(ARCALC_HAVE_STD_SIMD)
    return &stdsimd_kernels;
#else
    return &scalar_kernels;
#endif
}

const KernelTable* find(std::string_view name) {
    for (const KernelTable* t : all_kernel_tables())
        if (name == t->name) return t;
    return nullptr;
}

const KernelTable* initial_table() {
    if (const char* env = std::getenv("ARCALC_KERNELS")) {
        if (const KernelTable* t = find(env)) return t;
    }
    return pick_default();
}

const KernelTable*& active_table() {
    static const KernelTable* table = initial_table();
    return table;
}

} // namespace

const KernelTable& kernels() { return *active_table(); }

const std::vector<const KernelTable*>& all_kernel_tables() {
    static const std::vector<const KernelTable*> tables = [] {
        std::vector<const KernelTable*> v{&scalar_kernels};
#if defined(ARCALC_HAVE_STD_SIMD)
        v.push_back(&stdsimd_kernels);
#endif
#if defined(ARCALC_HAVE_AVX2_KERNELS)
        if (cpu_supports_avx2()) v.push_back(&avx2_kernels);
#endif
        return v;
    }();
    return tables;
}

bool select_kernels(std::string_view name) {
    if (name == "auto") {
        active_table() = pick_default();
        return true;
    }
    if (const KernelTable* t = find(name)) {
        active_table() = t;
        return true;
    }
    return false;
}

} // namespace arcalc
