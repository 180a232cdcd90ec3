#include "arcalc/decompose.hpp"

#include <random>

#include "arcalc/linalg.hpp"
#include "polyfp.hpp"

namespace arcalc {

namespace {

using polyfp::Poly;

// Minimal polynomial of the element with the given left multiplication
// matrix, relative to the start vector: the monic annihilator of the Krylov
// chain start, apply(start), apply^2(start), ...
Poly min_poly(const PrimeMatrix& mult, const PrimeMatrix& start, Field f) {
    PrimeMatrix krylov = start;
    PrimeMatrix current = start;
    for (;;) {
        PrimeMatrix next = mult * current;
        auto dep = solve_linear(krylov, next);
        if (dep) {
            Poly m(dep->rows() + 1, 0);
            for (std::size_t i = 0; i < dep->rows(); ++i) m[i] = f.neg(dep->at(i, 0));
            m[dep->rows()] = 1;
            return m;
        }
        krylov = PrimeMatrix::hstack(krylov, next);
        current = std::move(next);
        internal_check(krylov.cols() <= krylov.rows() + 1, "Krylov chain failed to close");
    }
}

// A monic nontrivial coprime factorization m = g h, if one exists.  The
// Berlekamp fixed space of F_p[X]/(m) separates the primary components; a
// nonconstant fixed element b takes a constant value c on at least one
// component and a different one on another, so gcd(m, b - c) splits m.
bool coprime_split(const Poly& m, Field f, Poly& g, Poly& h) {
    const std::size_t deg = polyfp::degree(m);
    if (deg < 2) return false;

    PrimeMatrix frob(deg, deg, f);
    Poly xp = polyfp::xpowmod(f.modulus(), m, f);
    Poly power{1};
    for (std::size_t i = 0; i < deg; ++i) {
        for (std::size_t k = 0; k < power.size(); ++k) frob.set(k, i, power[k]);
        power = polyfp::mulmod(power, xp, m, f);
    }
    PrimeMatrix fixed = kernel_basis(frob - PrimeMatrix::identity(deg, f));
    if (fixed.cols() <= 1) return false;

    for (std::size_t c = 0; c < fixed.cols(); ++c) {
        Poly b(deg, 0);
        for (std::size_t k = 0; k < deg; ++k) b[k] = fixed.at(k, c);
        polyfp::trim(b);
        if (polyfp::degree(b) == 0) continue;

        // b is semisimple with eigenvalues exactly the roots of its own
        // minimal polynomial, which splits into distinct linear factors.
        PrimeMatrix bmult(deg, deg, f);
        Poly col{1};
        // multiplication-by-b matrix via b * X^i mod m
        for (std::size_t i = 0; i < deg; ++i) {
            Poly prod = polyfp::mulmod(b, col, m, f);
            for (std::size_t k = 0; k < prod.size(); ++k) bmult.set(k, i, prod[k]);
            col = polyfp::mulmod(col, Poly{0, 1}, m, f);
        }
        PrimeMatrix start(deg, 1, f);
        start.set(0, 0, 1);
        Poly mb = min_poly(bmult, start, f);
        for (uint32_t root = 0; root < f.modulus(); ++root) {
            if (polyfp::eval(mb, root, f) != 0) continue;
            Poly shifted = polyfp::sub(b, Poly{root}, f);
            Poly cand = polyfp::gcd(m, shifted, f);
            if (polyfp::degree(cand) > 0 && polyfp::degree(cand) < polyfp::degree(m)) {
                g = cand;
                Poly quo, rem;
                polyfp::divmod(m, cand, f, quo, rem);
                internal_check(polyfp::is_zero(rem), "factor does not divide the minimal polynomial");
                h = quo;
                return true;
            }
        }
    }
    return false;
}

PrimeMatrix eval_matrix(const Poly& p, const PrimeMatrix& m, Field f) {
    PrimeMatrix acc(m.rows(), m.rows(), f);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * m;
        if (p[i]) acc = acc + PrimeMatrix::identity(m.rows(), f).scaled(p[i]);
    }
    return acc;
}

struct Split {
    Summand first, second;
};

// Split off the generalized kernel of g(phi) against h(phi) on both
// components at once; g h is the minimal polynomial of phi, so both kernels
// are nonzero on the ambient side and the pieces assemble to the object.
Split split_along(const SObject& x, const HMorphism& phi, const Poly& g, const Poly& h) {
    const Field f = x.amb().alg().field;
    auto piece = [&](const Poly& part) {
        KernelPair ka = kernel_of(LambdaMap(x.sub(), x.sub(), eval_matrix(part, phi.u.m(), f)));
        KernelPair kb = kernel_of(LambdaMap(x.amb(), x.amb(), eval_matrix(part, phi.v.m(), f)));
        auto restricted = solve_linear(kb.incl.m(), x.f().m() * ka.incl.m());
        internal_check(restricted.has_value(), "structure map does not respect the splitting");
        SObject obj(LambdaMap(ka.mod, kb.mod, *restricted));
        HMorphism incl = make_hmorphism(obj.h, x.h, ka.incl, kb.incl);
        return std::pair(std::move(obj), std::move(incl));
    };
    auto [o1, i1] = piece(g);
    auto [o2, i2] = piece(h);

    PrimeMatrix bboth = PrimeMatrix::hstack(i1.v.m(), i2.v.m());
    PrimeMatrix aboth = PrimeMatrix::hstack(i1.u.m(), i2.u.m());
    PrimeMatrix binv = inverse_checked(bboth);
    PrimeMatrix ainv = inverse_checked(aboth);

    auto proj_of = [&](std::size_t offset, const SObject& piece_obj) {
        PrimeMatrix pb = binv.block(offset ? o1.amb().dim() : 0, 0, piece_obj.amb().dim(),
                                    x.amb().dim());
        PrimeMatrix pa = ainv.block(offset ? o1.sub().dim() : 0, 0, piece_obj.sub().dim(),
                                    x.sub().dim());
        return make_hmorphism(x.h, piece_obj.h, LambdaMap(x.sub(), piece_obj.sub(), pa),
                              LambdaMap(x.amb(), piece_obj.amb(), pb));
    };
    HMorphism p1 = proj_of(0, o1);
    HMorphism p2 = proj_of(1, o2);
    return {{std::move(o1), std::move(i1), std::move(p1)},
            {std::move(o2), std::move(i2), std::move(p2)}};
}

void decompose_into(const SObject& x, const HMorphism& from_x, const HMorphism& to_x,
                    std::mt19937_64& rng, std::vector<Summand>& out) {
    if (is_zero_object(x)) return;
    EndoRing e = endo_ring(x);
    if (is_local_ring(e)) {
        out.push_back({x, to_x, from_x});
        return;
    }

    std::uniform_int_distribution<uint32_t> pick(0, e.field.modulus() - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        PrimeMatrix coeff(e.dim(), 1, e.field);
        for (std::size_t i = 0; i < e.dim(); ++i) coeff.set(i, 0, pick(rng));
        PrimeMatrix lphi(e.dim(), e.dim(), e.field);
        for (std::size_t i = 0; i < e.dim(); ++i) {
            uint32_t c = coeff.at(i, 0);
            if (c) lphi = lphi + e.left_mult[i].scaled(c);
        }
        Poly m = min_poly(lphi, e.one, e.field);
        Poly g, h;
        if (!coprime_split(m, e.field, g, h)) continue;

        HMorphism phi = combine_morphisms(x.h, x.h, e.basis, coeff);
        Split s = split_along(x, phi, g, h);
        decompose_into(s.first.piece, compose_h(s.first.proj, from_x),
                       compose_h(to_x, s.first.incl), rng, out);
        decompose_into(s.second.piece, compose_h(s.second.proj, from_x),
                       compose_h(to_x, s.second.incl), rng, out);
        return;
    }
    throw InternalCheckFailure("no splitting endomorphism found for a nonlocal ring");
}

} // namespace

Decomposition decompose_object(const SObject& x, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Decomposition dec;
    HMorphism id = identity_hmorphism(x.h);
    decompose_into(x, id, id, rng, dec.summands);

    // Completeness and orthogonality of the embeddings and projections.
    const Field f = x.amb().alg().field;
    PrimeMatrix sum_u(x.sub().dim(), x.sub().dim(), f);
    PrimeMatrix sum_v(x.amb().dim(), x.amb().dim(), f);
    for (const auto& s : dec.summands) {
        HMorphism around = compose_h(s.proj, s.incl);
        internal_check(around.u.m().is_identity() && around.v.m().is_identity(),
                       "projection does not retract the embedding");
        HMorphism idem = compose_h(s.incl, s.proj);
        sum_u = sum_u + idem.u.m();
        sum_v = sum_v + idem.v.m();
    }
    internal_check(sum_u.is_identity() && sum_v.is_identity(),
                   "summand idempotents do not sum to the identity");
    return dec;
}

std::optional<HMorphism> iso_witness(const SObject& x, const SObject& y, std::uint64_t seed) {
    if (is_zero_object(x) || is_zero_object(y)) {
        if (!is_zero_object(x) || !is_zero_object(y)) return std::nullopt;
        return HMorphism{LambdaMap::zero(x.sub(), y.sub()), LambdaMap::zero(x.amb(), y.amb())};
    }
    if (!(invariant_key(x) == invariant_key(y))) return std::nullopt;

    std::vector<HMorphism> basis = s_hom_basis(x, y);
    if (basis.empty()) return std::nullopt;
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::uniform_int_distribution<uint32_t> pick(0, x.amb().alg().field.modulus() - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        PrimeMatrix coeff(basis.size(), 1, x.amb().alg().field);
        for (std::size_t i = 0; i < basis.size(); ++i) coeff.set(i, 0, pick(rng));
        HMorphism cand = combine_morphisms(x.h, y.h, basis, coeff);
        if (cand.v.is_iso()) {
            internal_check(cand.u.is_iso(), "ambient isomorphism does not restrict to one");
            return cand;
        }
    }

    // Random search missed; match the indecomposable pieces instead and
    // assemble the witness from the summand isomorphisms.
    Decomposition dx = decompose_object(x, seed);
    Decomposition dy = decompose_object(y, seed + 1);
    if (dx.summands.size() != dy.summands.size()) return std::nullopt;
    if (dx.summands.size() <= 1) return std::nullopt;
    PrimeMatrix mu = PrimeMatrix::zero(y.sub().dim(), x.sub().dim(), x.amb().alg().field);
    PrimeMatrix mv = PrimeMatrix::zero(y.amb().dim(), x.amb().dim(), x.amb().alg().field);
    std::vector<bool> used(dy.summands.size(), false);
    for (const auto& sx : dx.summands) {
        bool matched = false;
        for (std::size_t j = 0; j < dy.summands.size(); ++j) {
            if (used[j]) continue;
            std::optional<HMorphism> w = iso_witness(sx.piece, dy.summands[j].piece, seed + 2);
            if (w) {
                HMorphism leg = compose_h(dy.summands[j].incl, compose_h(*w, sx.proj));
                mu = mu + leg.u.m();
                mv = mv + leg.v.m();
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    HMorphism total{LambdaMap(x.sub(), y.sub(), std::move(mu)),
                    LambdaMap(x.amb(), y.amb(), std::move(mv))};
    internal_check(total.v.is_iso() && total.u.is_iso(),
                   "assembled summand matching is not an isomorphism");
    return total;
}

bool is_isomorphic(const SObject& x, const SObject& y, std::uint64_t seed) {
    return iso_witness(x, y, seed).has_value();
}

} // namespace arcalc
