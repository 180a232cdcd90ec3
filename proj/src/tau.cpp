#include "arcalc/tau.hpp"

#include <tuple>

#include "arcalc/linalg.hpp"

namespace arcalc {

LambdaModule nu_projective(const LambdaModule& p) {
    internal_check(is_projective_module(p), "nu applied to a non-projective module");
    if (!p.alg().graded()) return p;
    return shifted_module(p, static_cast<int>(p.alg().n) - 1);
}

LambdaModule nu_inverse_injective(const LambdaModule& i) {
    internal_check(is_projective_module(i), "nu inverse applied to a non-injective module");
    if (!i.alg().graded()) return i;
    return shifted_module(i, 1 - static_cast<int>(i.alg().n));
}

LambdaMap nu_projective_map(const LambdaMap& f) {
    return LambdaMap(nu_projective(f.source()), nu_projective(f.target()), f.m());
}

LambdaMap nu_inverse_injective_map(const LambdaMap& f) {
    return LambdaMap(nu_inverse_injective(f.source()), nu_inverse_injective(f.target()), f.m());
}

namespace {

// Restrict g: B -> C to x: A -> D along inclusions a: A -> B, d: D -> C with
// g(im a) contained in im d.
LambdaMap restrict_along(const LambdaMap& g, const LambdaMap& a, const LambdaMap& d) {
    auto sol = solve_linear(d.m(), g.m() * a.m());
    internal_check(sol.has_value(), "map does not restrict to the given submodules");
    return LambdaMap(a.source(), d.source(), *sol);
}

TauMapResult tau_map_forward(const LambdaMap& g) {
    // Presentation of B through its cover P, and of C through the same P.
    CoverPair pc = projective_cover(g.source());
    KernelPair omega_b = kernel_of(pc.map);
    CoverPair qc = projective_cover(omega_b.mod);
    LambdaMap d = compose(omega_b.incl, qc.map); // Q -> P

    LambdaMap ge = compose(g, pc.map); // P -> C, onto im(g) + ...: not necessarily a cover
    KernelPair kge = kernel_of(ge);
    CoverPair rc = projective_cover(kge.mod);
    LambdaMap t = compose(kge.incl, rc.map); // R -> P

    auto s = factor_right(d, t); // s: Q -> R with t . s = d
    internal_check(s.has_value(), "presentation comparison map does not lift");

    LambdaMap nu_d = nu_projective_map(d);
    LambdaMap nu_t = nu_projective_map(t);
    LambdaMap nu_s = nu_projective_map(*s);

    KernelPair tb = kernel_of(nu_d); // tau(B) inside nu(Q)
    KernelPair tc = kernel_of(nu_t); // tau(C) inside nu(R)
    LambdaMap h = restrict_along(nu_s, tb.incl, tc.incl);

    TauMapResult out{h, PresentationDiagram{qc.mod, pc.mod, rc.mod, d, pc.map, t, *s},
                     std::nullopt};
    return out;
}

TauMapResult tau_map_inverse(const LambdaMap& f) {
    // Copresentation of the target B through its envelope I0, and of the
    // source A through the same I0.
    EnvelopePair ie = injective_envelope(f.target());
    CokernelPair cok_i = cokernel_of(ie.map);
    EnvelopePair i1 = injective_envelope(cok_i.mod);
    LambdaMap delta = compose(i1.map, cok_i.proj); // I0 -> I1

    LambdaMap fi = compose(ie.map, f); // A -> I0
    CokernelPair cok_fi = cokernel_of(fi);
    EnvelopePair je = injective_envelope(cok_fi.mod);
    LambdaMap u = compose(je.map, cok_fi.proj); // I0 -> J

    auto w = factor_left(delta, u); // w: J -> I1 with w . u = delta
    internal_check(w.has_value(), "copresentation comparison map does not extend");

    LambdaMap nu_delta = nu_inverse_injective_map(delta);
    LambdaMap nu_u = nu_inverse_injective_map(u);
    LambdaMap nu_w = nu_inverse_injective_map(*w);

    CokernelPair ta = cokernel_of(nu_u);     // tau^-(A) as quotient of nu^-(J)
    CokernelPair tb = cokernel_of(nu_delta); // tau^-(B) as quotient of nu^-(I1)
    auto h = factor_left(compose(tb.proj, nu_w), ta.proj);
    internal_check(h.has_value(), "inverse translate does not descend to the cokernels");

    TauMapResult out{*h, std::nullopt,
                     CopresentationDiagram{ie.mod, i1.mod, je.mod, ie.map, delta, u, *w}};
    return out;
}

} // namespace

TauMapResult tau_map(const LambdaMap& g, bool inverse) {
    return inverse ? tau_map_inverse(g) : tau_map_forward(g);
}

LambdaModule tau_module(const LambdaModule& m, bool inverse) {
    if (!inverse) {
        CoverPair pc = projective_cover(m);
        KernelPair om = kernel_of(pc.map);
        CoverPair qc = projective_cover(om.mod);
        LambdaMap d = compose(om.incl, qc.map);
        return kernel_of(nu_projective_map(d)).mod;
    }
    EnvelopePair ie = injective_envelope(m);
    CokernelPair cok = cokernel_of(ie.map);
    EnvelopePair i1 = injective_envelope(cok.mod);
    LambdaMap delta = compose(i1.map, cok.proj);
    return cokernel_of(nu_inverse_injective_map(delta)).mod;
}

LambdaModule omega_module(const LambdaModule& m, int exponent) {
    LambdaModule cur = m;
    for (; exponent > 0; --exponent) cur = kernel_of(projective_cover(cur).map).mod;
    for (; exponent < 0; ++exponent) cur = cokernel_of(injective_envelope(cur).map).mod;
    return cur;
}

LambdaMap omega_map(const LambdaMap& f, int exponent) {
    LambdaMap cur = f;
    for (; exponent > 0; --exponent) {
        CoverPair pa = projective_cover(cur.source());
        CoverPair pb = projective_cover(cur.target());
        auto lift = factor_right(compose(cur, pa.map), pb.map);
        internal_check(lift.has_value(), "map does not lift to the covers");
        KernelPair ka = kernel_of(pa.map);
        KernelPair kb = kernel_of(pb.map);
        cur = restrict_along(*lift, ka.incl, kb.incl);
    }
    for (; exponent < 0; ++exponent) {
        EnvelopePair ea = injective_envelope(cur.source());
        EnvelopePair eb = injective_envelope(cur.target());
        auto ext = factor_left(compose(eb.map, cur), ea.map);
        internal_check(ext.has_value(), "map does not extend to the envelopes");
        CokernelPair ca = cokernel_of(ea.map);
        CokernelPair cb = cokernel_of(eb.map);
        auto desc = factor_left(compose(cb.proj, *ext), ca.proj);
        internal_check(desc.has_value(), "map does not descend to the cosyzygies");
        cur = *desc;
    }
    return cur;
}

namespace {

StripResult strip_full_blocks(const LambdaMap& f) {
    const AlgebraSpec& alg = f.source().alg();
    const Field fld = alg.field;

    auto core_data = [&](const LambdaModule& m) {
        ModuleDecomposition dec = decompose_module(m);
        Partition core, dropped;
        std::vector<std::size_t> keep_coords;
        std::size_t off = 0;
        for (const auto& p : dec.parts) {
            if (p.len == alg.n) {
                dropped.push_back(p);
            } else {
                core.push_back(p);
                for (std::size_t j = 0; j < p.len; ++j) keep_coords.push_back(off + j);
            }
            off += p.len;
        }
        return std::tuple(dec, core, dropped, keep_coords);
    };

    auto [dec_a, core_a, drop_a, keep_a] = core_data(f.source());
    auto [dec_b, core_b, drop_b, keep_b] = core_data(f.target());

    LambdaModule src = module_from_partition(alg, core_a);
    LambdaModule tgt = module_from_partition(alg, core_b);

    // Inclusion of the source core and projection onto the target core, both
    // through the canonical coordinates.
    PrimeMatrix incl_canon(f.source().dim(), keep_a.size(), fld);
    for (std::size_t q = 0; q < keep_a.size(); ++q) incl_canon.set(keep_a[q], q, 1);
    PrimeMatrix sel_canon(keep_b.size(), f.target().dim(), fld);
    for (std::size_t q = 0; q < keep_b.size(); ++q) sel_canon.set(q, keep_b[q], 1);

    PrimeMatrix incl = f.source().dim() ? inverse_checked(dec_a.u) * incl_canon : incl_canon;
    PrimeMatrix core_m = sel_canon * dec_b.u * f.m() * incl;
    return {LambdaMap(src, tgt, core_m), drop_a, drop_b};
}

} // namespace

StripResult strip_injectives(const LambdaMap& f) { return strip_full_blocks(f); }
StripResult strip_projectives(const LambdaMap& f) { return strip_full_blocks(f); }

std::optional<std::pair<LambdaMap, LambdaMap>> through_injective(const LambdaMap& u) {
    EnvelopePair e = injective_envelope(u.source());
    auto w = factor_left(u, e.map);
    if (!w) return std::nullopt;
    return std::pair(e.map, *w);
}

std::optional<std::pair<LambdaMap, LambdaMap>> through_projective(const LambdaMap& u) {
    CoverPair p = projective_cover(u.target());
    auto w = factor_right(u, p.map);
    if (!w) return std::nullopt;
    return std::pair(*w, p.map);
}

} // namespace arcalc
