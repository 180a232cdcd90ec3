#pragma once

#include <optional>

#include "arcalc/envelopes.hpp"

namespace arcalc {

// Nakayama functor on projectives (= injectives).  The plain algebra is
// symmetric, so nu is the identity; on the graded backend the injective
// envelope of the simple in degree d is the projective with top degree
// d + n - 1, so nu shifts all degrees up by n - 1.
LambdaModule nu_projective(const LambdaModule& p);
LambdaModule nu_inverse_injective(const LambdaModule& i);
LambdaMap nu_projective_map(const LambdaMap& f);
LambdaMap nu_inverse_injective_map(const LambdaMap& f);

// Data of the projective presentation used by the forward translate of a map
// g: B -> C.  Rows: Q -d-> P -e-> B with e a cover and d = (inclusion of
// ker e) . (cover of ker e); R -t-> P covers ker(g . e); s solves t . s = d.
struct PresentationDiagram {
    LambdaModule q, p, r;
    LambdaMap d, e, t, s;
};

struct CopresentationDiagram {
    LambdaModule i0, i1, j;
    LambdaMap i, delta, u, w; // i: B -> I0 envelope, delta: I0 -> I1, w . u = delta
};

struct TauMapResult {
    LambdaMap map; // tau(g): tau(B) -> tau(C), or tau^-(f): tau^-(A) -> tau^-(B)
    std::optional<PresentationDiagram> pres;
    std::optional<CopresentationDiagram> copres;
};

// Auslander-Reiten translate of a morphism, computed from a projective
// presentation of the source (forward) or an injective copresentation of the
// target (inverse).  The forward translate presents the target C through
// g . e, which is a presentation of C only when g is epic; dually the inverse
// expects a monic map.  Sources and targets of the result carry no injective
// (forward) / projective (inverse) direct summands.
TauMapResult tau_map(const LambdaMap& g, bool inverse = false);

// Translate of a module: tau M = ker(nu d) for a minimal presentation
// Q -d-> P -> M, and dually for the inverse.
LambdaModule tau_module(const LambdaModule& m, bool inverse = false);

// Syzygy functors via covers and envelopes; exponent < 0 uses the inverse.
LambdaModule omega_module(const LambdaModule& m, int exponent);
LambdaMap omega_map(const LambdaMap& f, int exponent);

struct StripResult {
    LambdaMap map;
    Partition dropped_source;
    Partition dropped_target;
};

// Replace f by its compression to the non-projective-injective cores of its
// ends; the result represents the same map in the stable category.
StripResult strip_injectives(const LambdaMap& f);
StripResult strip_projectives(const LambdaMap& f);

// If u factors through an injective (resp. projective) module, return the
// factorization through the envelope of the source (resp. cover of the
// target).
std::optional<std::pair<LambdaMap, LambdaMap>> through_injective(const LambdaMap& u);
std::optional<std::pair<LambdaMap, LambdaMap>> through_projective(const LambdaMap& u);

} // namespace arcalc
