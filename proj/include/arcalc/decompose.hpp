#pragma once

#include <cstdint>
#include <optional>

#include "arcalc/endo.hpp"

namespace arcalc {

// One indecomposable summand with its embedding into and projection from
// the decomposed object; proj . incl is the identity of the piece and the
// incl . proj sum over all pieces is the identity of the whole.
struct Summand {
    SObject piece;
    HMorphism incl;
    HMorphism proj;
};

struct Decomposition {
    std::vector<Summand> summands;
};

// Krull-Schmidt decomposition.  Locality of the endomorphism ring decides
// indecomposability deterministically; the splitting witnesses come from
// minimal polynomials of randomly drawn endomorphisms, so the summand order
// depends only on the seed.
Decomposition decompose_object(const SObject& x, std::uint64_t seed = 0);

// Isomorphism test: an invariant fingerprint gate, then a randomized search
// for an invertible morphism, then decomposition matching as a fallback for
// decomposable inputs.  iso_witness returns the isomorphism it found.
std::optional<HMorphism> iso_witness(const SObject& x, const SObject& y,
                                     std::uint64_t seed = 0);
bool is_isomorphic(const SObject& x, const SObject& y, std::uint64_t seed = 0);

} // namespace arcalc
