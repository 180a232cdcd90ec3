#pragma once

#include "arcalc/hobjects.hpp"
#include "arcalc/lambda_map.hpp"

#include <cstdint>

namespace arcalc {

// Almost split sequence 0 -> translate -> middle -> c -> 0 in the module
// category, ending at an indecomposable nonprojective module c.  The maps
// satisfy g * f = 0, f is monic, g is epic, and dim middle = dim ends.
struct ModuleARSequence {
    LambdaMap f;
    LambdaMap g;

    const LambdaModule& translate() const { return f.source(); }
    const LambdaModule& middle() const { return f.target(); }
    const LambdaModule& end() const { return g.target(); }
};

ModuleARSequence module_ar_sequence(const LambdaModule& c);

// Almost split sequence 0 -> left -> middle -> right -> 0 in the submodule
// category, ending at the indecomposable nonprojective object passed in.
// The factory verifies componentwise exactness and non-splitness; the left
// term is the Auslander-Reiten translate of the right term by construction.
struct ARSequence {
    SObject left;
    SObject middle;
    SObject right;
    HMorphism f;
    HMorphism g;
};

ARSequence ar_sequence(const SObject& c, std::uint64_t seed = 0);

} // namespace arcalc
