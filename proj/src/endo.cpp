#include "arcalc/endo.hpp"

#include <sstream>

#include "arcalc/linalg.hpp"

namespace arcalc {

namespace {

PrimeMatrix vec_of(const PrimeMatrix& m) {
    PrimeMatrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

} // namespace

HMorphism combine_morphisms(const HObject& x, const HObject& y,
                            const std::vector<HMorphism>& basis, const PrimeMatrix& coeff) {
    internal_check(coeff.cols() == 1 && coeff.rows() == basis.size(),
                   "coefficient vector does not fit the basis");
    const Field f = x.amb().alg().field;
    PrimeMatrix u(y.sub().dim(), x.sub().dim(), f);
    PrimeMatrix v(y.amb().dim(), x.amb().dim(), f);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        uint32_t c = coeff.at(i, 0);
        if (!c) continue;
        u = u + basis[i].u.m().scaled(c);
        v = v + basis[i].v.m().scaled(c);
    }
    return make_hmorphism(x, y, LambdaMap(x.sub(), y.sub(), u), LambdaMap(x.amb(), y.amb(), v));
}

EndoRing endo_ring(const SObject& x) {
    const Field f = x.amb().alg().field;
    EndoRing e;
    e.field = f;
    e.basis = s_hom_basis(x, x);
    const std::size_t d = e.basis.size();

    if (f.modulus() <= 2 * d) {
        std::ostringstream msg;
        msg << "radical computation needs p > 2 * dim End = " << 2 * d << ", got p = "
            << f.modulus();
        throw InvalidInput(msg.str());
    }
    if (d == 0) {
        e.one = PrimeMatrix(0, 1, f);
        e.radical = PrimeMatrix(0, 0, f);
        return e;
    }

    // Express products in the basis; the v components alone are independent
    // and determine the morphism, so solving in their span is enough.
    PrimeMatrix vmat(x.amb().dim() * x.amb().dim(), d, f);
    for (std::size_t i = 0; i < d; ++i) {
        PrimeMatrix col = vec_of(e.basis[i].v.m());
        for (std::size_t r = 0; r < col.rows(); ++r) vmat.set(r, i, col.at(r, 0));
    }

    e.left_mult.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        PrimeMatrix rhs(x.amb().dim() * x.amb().dim(), d, f);
        for (std::size_t j = 0; j < d; ++j) {
            PrimeMatrix prod = vec_of(e.basis[i].v.m() * e.basis[j].v.m());
            for (std::size_t r = 0; r < prod.rows(); ++r) rhs.set(r, j, prod.at(r, 0));
        }
        auto sol = solve_linear(vmat, rhs);
        internal_check(sol.has_value(), "endomorphism product escapes the basis span");
        e.left_mult.push_back(*sol);
    }

    auto one = solve_linear(vmat, vec_of(PrimeMatrix::identity(x.amb().dim(), f)));
    internal_check(one.has_value(), "identity endomorphism escapes the basis span");
    e.one = *one;

    // Radical as the kernel of the trace form of the regular representation.
    PrimeMatrix gram(d, d, f);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            PrimeMatrix prod = e.left_mult[i] * e.left_mult[j];
            uint32_t tr = 0;
            for (std::size_t k = 0; k < d; ++k) tr = f.add(tr, prod.at(k, k));
            gram.set(i, j, tr);
            gram.set(j, i, tr);
        }
    e.radical = kernel_basis(gram);
    return e;
}

PrimeMatrix endo_mult(const EndoRing& e, const PrimeMatrix& a, const PrimeMatrix& b) {
    PrimeMatrix out(e.dim(), 1, e.field);
    for (std::size_t i = 0; i < e.dim(); ++i) {
        uint32_t c = a.at(i, 0);
        if (c) out = out + (e.left_mult[i] * b).scaled(c);
    }
    return out;
}

bool is_local_ring(const EndoRing& e) {
    const Field f = e.field;
    const std::size_t d = e.dim();
    internal_check(d > 0, "locality of the zero ring is not defined");
    const std::size_t r = e.radical.cols();
    const std::size_t q = d - r;
    if (q == 1) return true;

    // Basis of a complement of the radical: identity columns whose addition
    // to the radical span increases the rank.
    PrimeMatrix span = e.radical;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < d && comp.size() < q; ++i) {
        PrimeMatrix cand(d, 1, f);
        cand.set(i, 0, 1);
        PrimeMatrix joined = span.cols() ? PrimeMatrix::hstack(span, cand) : cand;
        if (rank(joined) > rank(span)) {
            span = joined;
            comp.push_back(i);
        }
    }
    internal_check(comp.size() == q, "radical complement has the wrong size");

    // Change of basis [rad | comp]; quotient coordinates are the comp part.
    PrimeMatrix full = e.radical;
    for (std::size_t c : comp) {
        PrimeMatrix cand(d, 1, f);
        cand.set(c, 0, 1);
        full = full.cols() ? PrimeMatrix::hstack(full, cand) : cand;
    }
    PrimeMatrix full_inv = inverse_checked(full);

    auto to_quotient = [&](const PrimeMatrix& coeff) {
        PrimeMatrix all = full_inv * coeff;
        PrimeMatrix out(q, 1, f);
        for (std::size_t i = 0; i < q; ++i) out.set(i, 0, all.at(r + i, 0));
        return out;
    };
    auto lift = [&](const PrimeMatrix& qc) {
        PrimeMatrix out(d, 1, f);
        for (std::size_t i = 0; i < q; ++i) out.set(comp[i], 0, qc.at(i, 0));
        return out;
    };

    // Left multiplication matrices of the quotient algebra.
    std::vector<PrimeMatrix> qmult;
    qmult.reserve(q);
    for (std::size_t i = 0; i < q; ++i) {
        PrimeMatrix qi(q, 1, f);
        qi.set(i, 0, 1);
        PrimeMatrix li(q, q, f);
        PrimeMatrix lifted_i = lift(qi);
        for (std::size_t j = 0; j < q; ++j) {
            PrimeMatrix qj(q, 1, f);
            qj.set(j, 0, 1);
            PrimeMatrix prod = to_quotient(endo_mult(e, lifted_i, lift(qj)));
            for (std::size_t k = 0; k < q; ++k) li.set(k, j, prod.at(k, 0));
        }
        qmult.push_back(std::move(li));
    }

    // A finite division ring is commutative, so a noncommutative quotient
    // cannot be local.
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            if (!(qmult[i].column(j) == qmult[j].column(i))) return false;

    // Commutative semisimple: the fixed space of the Frobenius map has one
    // dimension per simple factor.
    auto qprod = [&](const PrimeMatrix& a, const PrimeMatrix& b) {
        PrimeMatrix out(q, 1, f);
        for (std::size_t i = 0; i < q; ++i) {
            uint32_t c = a.at(i, 0);
            if (c) out = out + (qmult[i] * b).scaled(c);
        }
        return out;
    };
    PrimeMatrix qone = to_quotient(e.one);
    auto qpow = [&](PrimeMatrix base, uint64_t exp) {
        PrimeMatrix acc = qone;
        while (exp) {
            if (exp & 1) acc = qprod(acc, base);
            base = qprod(base, base);
            exp >>= 1;
        }
        return acc;
    };

    PrimeMatrix frob(q, q, f);
    for (std::size_t i = 0; i < q; ++i) {
        PrimeMatrix qi(q, 1, f);
        qi.set(i, 0, 1);
        PrimeMatrix img = qpow(qi, f.modulus());
        for (std::size_t k = 0; k < q; ++k) frob.set(k, i, img.at(k, 0));
    }
    PrimeMatrix fixed = kernel_basis(frob - PrimeMatrix::identity(q, f));
    return fixed.cols() == 1;
}

} // namespace arcalc
