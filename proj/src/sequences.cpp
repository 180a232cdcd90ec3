#include "arcalc/sequences.hpp"

#include "arcalc/ar.hpp"
#include "arcalc/endo.hpp"
#include "arcalc/envelopes.hpp"
#include "arcalc/linalg.hpp"
#include "arcalc/minimal.hpp"

#include <utility>

namespace arcalc {

namespace {

PrimeMatrix vec(const PrimeMatrix& m) {
    PrimeMatrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            v.set(c * m.rows() + r, 0, m.at(r, c));
    return v;
}

LambdaMap first_inclusion(const LambdaModule& a, const LambdaModule& sum) {
    PrimeMatrix m(sum.dim(), a.dim(), a.alg().field);
    m.set_block(0, 0, PrimeMatrix::identity(a.dim(), a.alg().field));
    return LambdaMap(a, sum, std::move(m));
}

LambdaMap second_projection(const LambdaModule& a, const LambdaModule& b,
                            const LambdaModule& sum) {
    PrimeMatrix m(b.dim(), sum.dim(), b.alg().field);
    m.set_block(0, a.dim(), PrimeMatrix::identity(b.dim(), b.alg().field));
    return LambdaMap(sum, b, std::move(m));
}

void check_exact_component(const LambdaMap& f, const LambdaMap& g) {
    internal_check(compose(g, f).is_zero(), "almost split sequence: g . f != 0");
    internal_check(f.is_monic(), "almost split sequence: left map not monic");
    internal_check(g.is_epic(), "almost split sequence: right map not epic");
    internal_check(f.source().dim() + g.target().dim() == f.target().dim(),
                   "almost split sequence: middle dimension mismatch");
}

void check_sequence(const ARSequence& s) {
    check_exact_component(s.f.u, s.g.u);
    check_exact_component(s.f.v, s.g.v);

    // A splitting would be a morphism s: right -> middle with g . s = 1.
    // Morphisms into a submodule object are determined by their ambient
    // component, so it is enough to rule out v with g.v . v = 1.
    std::vector<HMorphism> sb = s_hom_basis(s.right, s.middle);
    std::size_t dc = s.right.amb().dim();
    Field f = s.right.f().m().field();
    PrimeMatrix sys(dc * dc, sb.size(), f);
    for (std::size_t i = 0; i < sb.size(); ++i)
        sys.set_block(0, i, vec(s.g.v.m() * sb[i].v.m()));
    internal_check(!solve_linear(sys, vec(PrimeMatrix::identity(dc, f))).has_value(),
                   "almost split sequence must not split");
}

// Sequence ending at (0 -> C): the left term is (C' = C') for the module
// almost split sequence 0 -> C' -> B -> C -> 0 and the middle is (C' c B).
ARSequence route_zero_submodule(const SObject& c) {
    ModuleARSequence m = module_ar_sequence(c.amb());
    SObject left(LambdaMap::identity(m.translate()));
    SObject middle(m.f);
    HMorphism fm = make_hmorphism(left.h, middle.h,
                                  LambdaMap::identity(m.translate()), m.f);
    HMorphism gm = make_hmorphism(middle.h, c.h,
                                  LambdaMap::zero(m.translate(), c.sub()), m.g);
    return {std::move(left), std::move(middle), c, std::move(fm), std::move(gm)};
}

// Sequence ending at an isomorphism (C' ~ C): the left term embeds the module
// translate A into its injective envelope, and the middle maps the module
// middle term B into I(A) + C by the extended envelope over g.
ARSequence route_isomorphism(const SObject& c) {
    ModuleARSequence m = module_ar_sequence(c.sub());
    EnvelopePair env = injective_envelope(m.translate());
    std::optional<LambdaMap> eprime = factor_left(env.map, m.f);
    internal_check(eprime.has_value(), "envelope does not extend along the almost split monomorphism");
    SObject left(env.map);
    LambdaModule mid_amb = direct_sum_module(env.mod, c.amb());
    PrimeMatrix bm = PrimeMatrix::vstack(eprime->m(), c.f().m() * m.g.m());
    SObject middle(LambdaMap(m.middle(), mid_amb, std::move(bm)));
    HMorphism fm = make_hmorphism(left.h, middle.h, m.f,
                                  first_inclusion(env.mod, mid_amb));
    HMorphism gm = make_hmorphism(middle.h, c.h, m.g,
                                  second_projection(env.mod, c.amb(), mid_amb));
    return {std::move(left), std::move(middle), c, std::move(fm), std::move(gm)};
}

// Coefficients, over hom_basis(C', A), of an extension class that is nonzero
// modulo the boundaries a.Hom(C',A') + Hom(C,A).c and is annihilated by the
// radical of End(c) acting by precomposition.  Such a class spans the socle
// of the extension group and realizes the almost split sequence.
PrimeMatrix socle_class(const SObject& c, const SObject& left, const EndoRing& e) {
    const LambdaMap& a = left.f();
    Field f = a.m().field();
    std::vector<LambdaMap> mb = hom_basis(c.sub(), left.amb());
    internal_check(!mb.empty(), "no homomorphisms to carry the almost split extension");
    std::size_t t = mb.size();
    std::size_t lead = left.amb().dim() * c.sub().dim();
    PrimeMatrix mstack(lead, t, f);
    for (std::size_t i = 0; i < t; ++i) mstack.set_block(0, i, vec(mb[i].m()));

    std::vector<LambdaMap> ub = hom_basis(c.sub(), left.sub());
    std::vector<LambdaMap> vb = hom_basis(c.amb(), left.amb());
    PrimeMatrix bound_vecs(lead, ub.size() + vb.size(), f);
    for (std::size_t i = 0; i < ub.size(); ++i)
        bound_vecs.set_block(0, i, vec(a.m() * ub[i].m()));
    for (std::size_t i = 0; i < vb.size(); ++i)
        bound_vecs.set_block(0, ub.size() + i, vec(vb[i].m() * c.f().m()));
    std::optional<PrimeMatrix> boundaries = solve_linear(mstack, bound_vecs);
    internal_check(boundaries.has_value(), "boundary maps escaped the hom basis");

    std::size_t r = e.radical.cols();
    PrimeMatrix socle = PrimeMatrix::identity(t, f);
    if (r > 0) {
        std::size_t ug = boundaries->cols();
        PrimeMatrix big(r * t, t + r * ug, f);
        for (std::size_t j = 0; j < r; ++j) {
            HMorphism eta = combine_morphisms(c.h, c.h, e.basis, e.radical.column(j));
            PrimeMatrix rhs(lead, t, f);
            for (std::size_t i = 0; i < t; ++i)
                rhs.set_block(0, i, vec(mb[i].m() * eta.u.m()));
            std::optional<PrimeMatrix> pj = solve_linear(mstack, rhs);
            internal_check(pj.has_value(), "radical action escaped the hom basis");
            big.set_block(j * t, 0, *pj);
            if (ug > 0) big.set_block(j * t, t + j * ug, boundaries->negated());
        }
        PrimeMatrix ker = kernel_basis(big);
        socle = ker.block(0, 0, t, ker.cols());
    }

    for (std::size_t col = 0; col < socle.cols(); ++col) {
        PrimeMatrix x = socle.column(col);
        if (!in_column_span(*boundaries, x)) return x;
    }
    throw InternalCheckFailure("no nonzero socle class for the almost split extension");
}

// Generic sequence ending at c = (C' c C), c neither zero-submodule nor an
// isomorphism.  Both component sequences split, so the middle is the object
// (A' + C' -> A + C) with triangular structure map [[a, h], [0, c]] for the
// translate a = (A' c A) and a socle extension class h: C' -> A.
ARSequence route_generic(const SObject& c, const EndoRing& e, std::uint64_t seed) {
    TauObjectResult tr = tau_s(c, false, seed);
    internal_check(tr.dropped.empty(), "translate of an indecomposable dropped summands");
    SObject left = std::move(tr.value);

    Field f = c.f().m().field();
    PrimeMatrix x = socle_class(c, left, e);
    std::vector<LambdaMap> mb = hom_basis(c.sub(), left.amb());
    PrimeMatrix h(left.amb().dim(), c.sub().dim(), f);
    for (std::size_t i = 0; i < mb.size(); ++i)
        if (x.at(i, 0) != 0) h = h + mb[i].m().scaled(x.at(i, 0));

    LambdaModule msub = direct_sum_module(left.sub(), c.sub());
    LambdaModule mamb = direct_sum_module(left.amb(), c.amb());
    PrimeMatrix top = PrimeMatrix::hstack(left.f().m(), h);
    PrimeMatrix bot = PrimeMatrix::hstack(
        PrimeMatrix::zero(c.amb().dim(), left.sub().dim(), f), c.f().m());
    SObject middle(LambdaMap(msub, mamb, PrimeMatrix::vstack(top, bot)));

    HMorphism fm = make_hmorphism(left.h, middle.h,
                                  first_inclusion(left.sub(), msub),
                                  first_inclusion(left.amb(), mamb));
    HMorphism gm = make_hmorphism(middle.h, c.h,
                                  second_projection(left.sub(), c.sub(), msub),
                                  second_projection(left.amb(), c.amb(), mamb));
    return {std::move(left), std::move(middle), c, std::move(fm), std::move(gm)};
}

} // namespace

ModuleARSequence module_ar_sequence(const LambdaModule& c) {
    if (c.dim() == 0)
        throw UndefinedOperation("no almost split sequence ends at the zero module");
    ModuleDecomposition dec = decompose_module(c);
    if (dec.parts.size() != 1)
        throw InvalidInput("almost split sequences end at indecomposable modules");
    std::size_t len = dec.parts[0].len;
    if (len == c.alg().n)
        throw UndefinedOperation("no almost split sequence ends at a projective module");
    bool graded = c.alg().graded();
    int top = graded ? dec.parts[0].top : 0;
    Field f = c.alg().field;

    LambdaModule translate =
        module_from_partition(c.alg(), {{len, graded ? top - 1 : 0}});
    Partition mid_parts{{len + 1, top}};
    if (len > 1) mid_parts.push_back({len - 1, graded ? top - 1 : 0});
    LambdaModule middle = module_from_partition(c.alg(), mid_parts);

    // f embeds the translate under T and truncates away its socle; g
    // truncates the long block and subtracts the embedded short block.
    PrimeMatrix fm(middle.dim(), len, f);
    for (std::size_t j = 0; j < len; ++j) fm.set(j + 1, j, 1);
    for (std::size_t j = 0; j + 1 < len; ++j) fm.set(len + 1 + j, j, 1);
    PrimeMatrix gm(len, middle.dim(), f);
    for (std::size_t j = 0; j < len; ++j) gm.set(j, j, 1);
    for (std::size_t j = 0; j + 1 < len; ++j) gm.set(j + 1, len + 1 + j, f.neg(1));

    LambdaMap fmap(translate, middle, std::move(fm));
    LambdaMap gmap(middle, c, inverse_checked(dec.u) * gm);
    internal_check(compose(gmap, fmap).is_zero(), "module almost split sequence: g . f != 0");
    internal_check(fmap.is_monic() && gmap.is_epic(),
                   "module almost split sequence: ends are not exact");
    return {std::move(fmap), std::move(gmap)};
}

ARSequence ar_sequence(const SObject& c, std::uint64_t seed) {
    if (is_projective_object(c))
        throw UndefinedOperation("no almost split sequence ends at a projective object");
    EndoRing e = endo_ring(c);
    if (!is_local_ring(e))
        throw InvalidInput("almost split sequences end at indecomposable objects");

    ARSequence seq = c.sub().dim() == 0 ? route_zero_submodule(c)
                     : c.f().is_iso()   ? route_isomorphism(c)
                                        : route_generic(c, e, seed);
    check_sequence(seq);
    return seq;
}

} // namespace arcalc
