#pragma once

#include <string>

#include "arcalc/lambda_map.hpp"

namespace arcalc {

// An object of the morphism category over the algebra: any map f: A -> B.
struct HObject {
    LambdaMap f;

    explicit HObject(LambdaMap m) : f(std::move(m)) {}
    const LambdaModule& sub() const { return f.source(); }
    const LambdaModule& amb() const { return f.target(); }
};

// Objects of the submodule category: the structure map is monic.
struct SObject {
    HObject h;

    explicit SObject(HObject x) : h(std::move(x)) {
        if (!h.f.is_monic()) throw InvalidInput("submodule object needs a monic structure map");
    }
    explicit SObject(LambdaMap m) : SObject(HObject(std::move(m))) {}
    const LambdaMap& f() const { return h.f; }
    const LambdaModule& sub() const { return h.f.source(); }
    const LambdaModule& amb() const { return h.f.target(); }
};

// Objects of the factor category: the structure map is epic.
struct FObject {
    HObject h;

    explicit FObject(HObject x) : h(std::move(x)) {
        if (!h.f.is_epic()) throw InvalidInput("factor object needs an epic structure map");
    }
    explicit FObject(LambdaMap m) : FObject(HObject(std::move(m))) {}
    const LambdaMap& f() const { return h.f; }
};

// A morphism (u, v): (f: A -> B) -> (g: A' -> B') with g . u = v . f.
struct HMorphism {
    LambdaMap u, v;
};

HMorphism make_hmorphism(const HObject& x, const HObject& y, LambdaMap u, LambdaMap v);
HMorphism identity_hmorphism(const HObject& x);
HMorphism compose_h(const HMorphism& second, const HMorphism& first);
HMorphism direct_sum_h(const HMorphism& a, const HMorphism& b);
HObject direct_sum_h(const HObject& a, const HObject& b);
SObject direct_sum_s(const SObject& a, const SObject& b);

// The four canonical sub/quotient constructions on a map, each with the
// canonical comparison morphism.  Ker and Epi map into the input, Cok and
// Mono map out of it.
enum class MapFunctor { ker, cok, mono, epi };

struct FunctorResult {
    HObject y;
    HMorphism connect;
    bool into_input; // true: connect is y -> x, false: x -> y
};

FunctorResult functor_apply(const HObject& x, MapFunctor which);

// Basis of Hom((A c B), (A' c B')): those v: B -> B' with v(A) inside A',
// paired with the restriction u.  Deterministic order inherited from
// hom_basis of the ambients.
std::vector<HMorphism> s_hom_basis(const SObject& x, const SObject& y);

// Iso-invariant fingerprint of a pair: dimensions, both partitions, and the
// intersection profile of the submodule against the radical and socle
// filtrations of the ambient (plus raw degree data on the graded backend).
struct InvariantKey {
    std::vector<long long> data;

    bool operator==(const InvariantKey& o) const { return data == o.data; }
    bool operator<(const InvariantKey& o) const { return data < o.data; }
    std::string to_string() const;
};

InvariantKey invariant_key(const SObject& x);

// Canonical textual label: ambient in Jordan coordinates, submodule as the
// column echelon basis in those coordinates.  Equal labels imply isomorphic
// objects (the converse needs an iso test).
std::string canonical_label(const SObject& x);

// Short human-readable form "([sub parts] c [ambient parts])".
std::string object_to_string(const SObject& x);

// Degree shift of a whole object; graded backend only.
SObject shift_object(const SObject& x, int l);

// Offset l such that shifting by l puts the highest ambient top degree at 0.
int normalize_offset(const SObject& x);

bool is_zero_object(const SObject& x);

} // namespace arcalc
