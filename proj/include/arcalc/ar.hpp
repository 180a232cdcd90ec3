#pragma once

#include "arcalc/hobjects.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arcalc {

// Auslander-Reiten translate in the submodule category.  Projective summands
// of the input (equivalently injective ones, the category is Frobenius) are
// dropped and reported; if nothing remains the translate is undefined.
struct TauObjectResult {
    SObject value;
    std::vector<std::string> dropped;
};

TauObjectResult tau_s(const SObject& x, bool inverse = false,
                      std::uint64_t seed = 0);

// Iterates the translate until the starting object reappears, up to a degree
// shift in the graded case.  objects[k] is the k-th translate; if the orbit
// closes within max_steps, period is set and objects.back() is isomorphic to
// shift_object(objects[0], shift).
struct OrbitResult {
    std::vector<SObject> objects;
    std::optional<std::size_t> period;
    int shift = 0;
};

OrbitResult tau_orbit(const SObject& x, std::size_t max_steps,
                      bool inverse = false, std::uint64_t seed = 0);

// Stable identities relating powers of the translate to syzygy functors.  The
// module-level translate is nu . omega^2 on the stable category, so tau^3 of
// the first cosyzygy is nu^3 omega^5 and tau^6 of the second cosyzygy is
// nu^6 omega^10:
//   tau3_cosyzygy   third translate against Mimo of nu^3 omega^5,
//   tau6_cosyzygy2  sixth translate against Mimo of nu^6 omega^10,
//   tau3_omega5     third translate against Mimo of the fifth syzygy alone;
//                   this needs nu to be the identity, so it is undefined over
//                   the graded backend.
enum class StableIdentity { tau3_cosyzygy, tau6_cosyzygy2, tau3_omega5 };

bool stable_identity_check(const SObject& x, StableIdentity which,
                           std::uint64_t seed = 0);

// Mimo invariance with witnesses.  Inputs are stripped of injective target
// summands and put in canonical Jordan coordinates; when the sources and
// targets then agree and Mimo(f) ~ Mimo(g), the returned automorphisms and
// factorization satisfy a . f - g . b = through_out . through_in with the
// right side passing through an injective module.
struct MimoIsoWitness {
    bool iso = false;
    std::optional<LambdaMap> a;           // target automorphism
    std::optional<LambdaMap> b;           // source automorphism
    std::optional<LambdaMap> through_in;  // source -> injective
    std::optional<LambdaMap> through_out; // injective -> target
};

MimoIsoWitness mimo_iso_witness(const HObject& f, const HObject& g,
                                std::uint64_t seed = 0);

} // namespace arcalc
