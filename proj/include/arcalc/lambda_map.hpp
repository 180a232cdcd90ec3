#pragma once

#include <optional>
#include <vector>

#include "arcalc/lambda_module.hpp"

namespace arcalc {

// A module homomorphism source -> target, acting on column vectors, so the
// matrix has shape dim(target) x dim(source) and composition is matrix
// multiplication.  Graded maps are homogeneous of degree 0.
class LambdaMap {
public:
    LambdaMap(LambdaModule source, LambdaModule target, PrimeMatrix m);

    static LambdaMap identity(const LambdaModule& m);
    static LambdaMap zero(const LambdaModule& source, const LambdaModule& target);

    const LambdaModule& source() const { return source_; }
    const LambdaModule& target() const { return target_; }
    const PrimeMatrix& m() const { return m_; }

    bool is_monic() const;
    bool is_epic() const;
    bool is_iso() const;
    bool is_zero() const { return m_.is_zero(); }

    bool operator==(const LambdaMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && m_ == o.m_;
    }
    bool operator!=(const LambdaMap& o) const { return !(*this == o); }

private:
    LambdaModule source_;
    LambdaModule target_;
    PrimeMatrix m_;
};

LambdaMap compose(const LambdaMap& g, const LambdaMap& f); // g after f
LambdaMap direct_sum_map(const LambdaMap& f, const LambdaMap& g);
LambdaMap add(const LambdaMap& f, const LambdaMap& g);
LambdaMap scale_map(const LambdaMap& f, uint32_t c);
LambdaMap negate(const LambdaMap& f);

// Deterministic basis of Hom(a, b): Jordan-decompose both sides and take the
// shift maps between block pairs, conjugated back to the given coordinates.
std::vector<LambdaMap> hom_basis(const LambdaModule& a, const LambdaModule& b);

struct KernelPair {
    LambdaModule mod;
    LambdaMap incl; // mod -> source(f)
};
KernelPair kernel_of(const LambdaMap& f);

struct CokernelPair {
    LambdaModule mod;
    LambdaMap proj; // target(f) -> mod
};
CokernelPair cokernel_of(const LambdaMap& f);

struct ImagePair {
    LambdaModule mod;
    LambdaMap incl;    // mod -> target(f)
    LambdaMap corestr; // source(f) -> mod, with incl . corestr = f
};
ImagePair image_of(const LambdaMap& f);

// Solve x . f = g for x: target(f) -> target(g); both maps share a source.
std::optional<LambdaMap> factor_left(const LambdaMap& g, const LambdaMap& f);
// Solve h . x = g for x: source(g) -> source(h); both maps share a target.
std::optional<LambdaMap> factor_right(const LambdaMap& g, const LambdaMap& h);

} // namespace arcalc
