#include "arcalc/envelopes.hpp"

#include "arcalc/linalg.hpp"

namespace arcalc {

namespace {

PrimeMatrix truncation(std::size_t from_len, std::size_t to_len, Field f) {
    PrimeMatrix m(to_len, from_len, f);
    for (std::size_t j = 0; j < to_len && j < from_len; ++j) m.set(j, j, 1);
    return m;
}

PrimeMatrix socle_embedding(std::size_t from_len, std::size_t to_len, Field f) {
    PrimeMatrix m(to_len, from_len, f);
    const std::size_t k = to_len - from_len;
    for (std::size_t j = 0; j < from_len; ++j) m.set(j + k, j, 1);
    return m;
}

} // namespace

CoverPair projective_cover(const LambdaModule& m) {
    const AlgebraSpec& alg = m.alg();
    ModuleDecomposition dec = decompose_module(m);
    Partition cover_parts;
    for (const auto& p : dec.parts) cover_parts.push_back({alg.n, p.top});
    LambdaModule cover = module_from_partition(alg, cover_parts);

    PrimeMatrix p_canon(m.dim(), cover.dim(), alg.field);
    std::size_t row = 0, col = 0;
    for (const auto& p : dec.parts) {
        p_canon.set_block(row, col, truncation(alg.n, p.len, alg.field));
        row += p.len;
        col += alg.n;
    }
    PrimeMatrix pm = m.dim() ? inverse_checked(dec.u) * p_canon : p_canon;
    LambdaMap map(cover, m, pm);
    internal_check(map.is_epic(), "projective cover is not onto");
    internal_check(in_column_span(radical_basis(cover), kernel_basis(map.m())),
                   "projective cover is not minimal");
    return {cover, map};
}

EnvelopePair injective_envelope(const LambdaModule& m) {
    const AlgebraSpec& alg = m.alg();
    ModuleDecomposition dec = decompose_module(m);
    Partition env_parts;
    for (const auto& p : dec.parts)
        env_parts.push_back({alg.n, p.top + static_cast<int>(alg.n - p.len)});
    LambdaModule env = module_from_partition(alg, env_parts);

    PrimeMatrix e_canon(env.dim(), m.dim(), alg.field);
    std::size_t row = 0, col = 0;
    for (const auto& p : dec.parts) {
        e_canon.set_block(row, col, socle_embedding(p.len, alg.n, alg.field));
        row += alg.n;
        col += p.len;
    }
    LambdaMap map(m, env, e_canon * dec.u);
    internal_check(map.is_monic(), "injective envelope is not one to one");
    // Essential extension: the socle of the envelope is hit by the socle of m.
    internal_check(kernel_basis(env.t()).cols() == kernel_basis(m.t()).cols(),
                   "injective envelope is not minimal");
    return {env, map};
}

} // namespace arcalc
