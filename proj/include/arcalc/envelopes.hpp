#pragma once

#include "arcalc/lambda_map.hpp"

namespace arcalc {

struct CoverPair {
    LambdaModule mod;
    LambdaMap map; // mod -> M, a projective cover
};

struct EnvelopePair {
    LambdaModule mod;
    LambdaMap map; // M -> mod, an injective envelope
};

// Both backends are self injective: the indecomposable projectives and
// injectives are the blocks of length n.  On the graded backend the cover of
// J_i<d> is J_n<d> and the envelope is J_n<d + n - i>.
CoverPair projective_cover(const LambdaModule& m);
EnvelopePair injective_envelope(const LambdaModule& m);

} // namespace arcalc
