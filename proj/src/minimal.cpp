#include "arcalc/minimal.hpp"

#include "arcalc/decompose.hpp"
#include "arcalc/envelopes.hpp"
#include "arcalc/linalg.hpp"

namespace arcalc {

MimoResult mimo(const HObject& x) {
    KernelPair k = kernel_of(x.f);
    EnvelopePair env = injective_envelope(k.mod);
    // Extend env.map along the inclusion Ker f c A; injectivity of the
    // target makes this possible.
    auto e = factor_left(env.map, k.incl);
    internal_check(e.has_value(), "injective envelope does not extend along the kernel");
    LambdaModule bigger = direct_sum_module(x.amb(), env.mod);
    LambdaMap stacked(x.f.source(), bigger, PrimeMatrix::vstack(x.f.m(), e->m()));
    SObject y(stacked);
    internal_check(y.f().is_monic(), "mimo construction is not monic");

    const Field f = x.f.source().alg().field;
    PrimeMatrix pick = PrimeMatrix::hstack(PrimeMatrix::identity(x.amb().dim(), f),
                                           PrimeMatrix(x.amb().dim(), env.mod.dim(), f));
    HMorphism to_x = make_hmorphism(y.h, x, LambdaMap::identity(x.f.source()),
                                    LambdaMap(bigger, x.amb(), pick));
    return {std::move(y), std::move(to_x), *e};
}

MepiResult mepi(const HObject& x) {
    CokernelPair c = cokernel_of(x.f);
    CoverPair cov = projective_cover(c.mod);
    // Lift cov.map along the projection B -> Cok f; projectivity of the
    // source makes this possible.
    auto p = factor_right(cov.map, c.proj);
    internal_check(p.has_value(), "projective cover does not lift along the cokernel");
    LambdaModule bigger = direct_sum_module(x.f.source(), cov.mod);
    LambdaMap glued(bigger, x.amb(), PrimeMatrix::hstack(x.f.m(), p->m()));
    FObject y(glued);

    const Field f = x.f.source().alg().field;
    PrimeMatrix incl = PrimeMatrix::vstack(PrimeMatrix::identity(x.f.source().dim(), f),
                                           PrimeMatrix(cov.mod.dim(), x.f.source().dim(), f));
    HMorphism from_x = make_hmorphism(x, y.h, LambdaMap(x.f.source(), bigger, incl),
                                      LambdaMap::identity(x.amb()));
    return {std::move(y), std::move(from_x), *p};
}

namespace {

bool split_mono_between_projectives(const LambdaMap& f) {
    if (!is_projective_module(f.source()) || !is_projective_module(f.target())) return false;
    return factor_left(LambdaMap::identity(f.source()), f).has_value();
}

} // namespace

bool is_projective_object(const SObject& x) { return split_mono_between_projectives(x.f()); }

bool is_injective_object(const SObject& x) { return split_mono_between_projectives(x.f()); }

ProjInjClassification classify_proj_inj(const SObject& x, std::uint64_t seed) {
    ProjInjClassification out;
    out.projective = true;
    out.injective = true;
    for (const Summand& s : decompose_object(x, seed).summands) {
        bool proj = is_projective_object(s.piece);
        bool inj = is_injective_object(s.piece);
        out.projective = out.projective && proj;
        out.injective = out.injective && inj;
        std::string line = object_to_string(s.piece);
        if (proj)
            line += s.piece.sub().dim() == 0 ? " ~ (0 in Lambda)" : " ~ (Lambda = Lambda)";
        else
            line += " ~ neither projective nor injective";
        out.witness.push_back(std::move(line));
    }
    return out;
}

FactorsThroughResult factors_through(const LambdaMap& u, FactorKind kind) {
    if (kind == FactorKind::injective) {
        EnvelopePair env = injective_envelope(u.source());
        std::optional<LambdaMap> w = factor_left(u, env.map);
        if (!w) return {};
        return {true, env.map, std::move(w)};
    }
    CoverPair cov = projective_cover(u.target());
    std::optional<LambdaMap> w = factor_right(u, cov.map);
    if (!w) return {};
    return {true, std::move(w), cov.map};
}

} // namespace arcalc
