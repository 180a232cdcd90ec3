#pragma once

#include "arcalc/hobjects.hpp"

namespace arcalc {

// Minimal monomorphism attached to a map f: A -> B.  The result is the
// submodule object Mimo f = (f, e): A -> B + I(Ker f) together with the
// canonical comparison (1_A, [1_B 0]): Mimo f -> f and the extension
// component e itself.
struct MimoResult {
    SObject y;
    HMorphism to_x;
    LambdaMap ext;
};

MimoResult mimo(const HObject& x);

// Minimal epimorphism attached to a map f: A -> B.  The result is the factor
// object Mepi f = [f p]: A + P(Cok f) -> B together with the canonical
// comparison (incl_A, 1_B): f -> Mepi f and the cover component p itself.
struct MepiResult {
    FObject y;
    HMorphism from_x;
    LambdaMap ext;
};

MepiResult mepi(const HObject& x);

// Projective and injective objects of the submodule category.  Over the
// self-injective base both classes coincide: split monomorphisms between
// projective modules.
bool is_projective_object(const SObject& x);
bool is_injective_object(const SObject& x);

// Classification against the list of indecomposable projective (equivalently
// injective) objects (0 in Lambda) and (Lambda = Lambda), degree-shifted on
// the graded backend.  The witness names each indecomposable summand and the
// list entry it matches, if any; the flags hold exactly when every summand
// matches.  The zero object is both.
struct ProjInjClassification {
    bool projective = false;
    bool injective = false;
    std::vector<std::string> witness;
};

ProjInjClassification classify_proj_inj(const SObject& x, std::uint64_t seed = 0);

// Does u factor through an injective (resp. projective) module?  It does iff
// it factors through the injective envelope of its source (resp. the
// projective cover of its target), so one hom-space solve decides; when yes,
// u = second . first with the envelope or cover as the witness leg.
enum class FactorKind { injective, projective };

struct FactorsThroughResult {
    bool yes = false;
    std::optional<LambdaMap> first;
    std::optional<LambdaMap> second;
};

FactorsThroughResult factors_through(const LambdaMap& u, FactorKind kind);

} // namespace arcalc
