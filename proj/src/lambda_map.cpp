#include "arcalc/lambda_map.hpp"

#include <algorithm>

#include "arcalc/linalg.hpp"

namespace arcalc {

LambdaMap::LambdaMap(LambdaModule source, LambdaModule target, PrimeMatrix m)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)) {
    if (source_.alg() != target_.alg())
        throw InvalidInput("map between modules over different algebras");
    if (m_.rows() != target_.dim() || m_.cols() != source_.dim())
        throw InvalidInput("map matrix has wrong shape");
    if (!(m_ * source_.t() == target_.t() * m_))
        throw InvalidInput("matrix does not commute with the T action");
    if (source_.alg().graded()) {
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (m_.at(i, j) != 0 && target_.degrees()[i] != source_.degrees()[j])
                    throw InvalidInput("graded map must be homogeneous of degree 0");
    }
}

LambdaMap LambdaMap::identity(const LambdaModule& m) {
    return LambdaMap(m, m, PrimeMatrix::identity(m.dim(), m.alg().field));
}

LambdaMap LambdaMap::zero(const LambdaModule& source, const LambdaModule& target) {
    return LambdaMap(source, target, PrimeMatrix(target.dim(), source.dim(), source.alg().field));
}

bool LambdaMap::is_monic() const { return rank(m_) == source_.dim(); }
bool LambdaMap::is_epic() const { return rank(m_) == target_.dim(); }
bool LambdaMap::is_iso() const {
    return source_.dim() == target_.dim() && rank(m_) == source_.dim();
}

LambdaMap compose(const LambdaMap& g, const LambdaMap& f) {
    internal_check(g.source() == f.target(), "composition of non-composable maps");
    return LambdaMap(f.source(), g.target(), g.m() * f.m());
}

LambdaMap direct_sum_map(const LambdaMap& f, const LambdaMap& g) {
    return LambdaMap(direct_sum_module(f.source(), g.source()),
                     direct_sum_module(f.target(), g.target()),
                     PrimeMatrix::direct_sum(f.m(), g.m()));
}

LambdaMap add(const LambdaMap& f, const LambdaMap& g) {
    internal_check(f.source() == g.source() && f.target() == g.target(),
                   "sum of maps with different ends");
    return LambdaMap(f.source(), f.target(), f.m() + g.m());
}

LambdaMap scale_map(const LambdaMap& f, uint32_t c) {
    return LambdaMap(f.source(), f.target(), f.m().scaled(c));
}

LambdaMap negate(const LambdaMap& f) {
    return LambdaMap(f.source(), f.target(), f.m().negated());
}

namespace {

// The shift map J_a -> J_b sending the generator to T^k applied to the
// generator of the target: basis vector j goes to basis vector j + k.
PrimeMatrix block_shift(std::size_t a, std::size_t b, std::size_t k, Field f) {
    PrimeMatrix m(b, a, f);
    for (std::size_t j = 0; j + k < b && j < a; ++j) m.set(j + k, j, 1);
    return m;
}

} // namespace

std::vector<LambdaMap> hom_basis(const LambdaModule& a, const LambdaModule& b) {
    internal_check(a.alg() == b.alg(), "hom between modules over different algebras");
    const Field f = a.alg().field;
    ModuleDecomposition da = decompose_module(a);
    ModuleDecomposition db = decompose_module(b);
    PrimeMatrix ua_inv = a.dim() ? inverse_checked(da.u) : PrimeMatrix(0, 0, f);
    PrimeMatrix ub_inv = b.dim() ? inverse_checked(db.u) : PrimeMatrix(0, 0, f);

    std::vector<std::size_t> off_a(da.parts.size() + 1, 0);
    for (std::size_t i = 0; i < da.parts.size(); ++i) off_a[i + 1] = off_a[i] + da.parts[i].len;
    std::vector<std::size_t> off_b(db.parts.size() + 1, 0);
    for (std::size_t i = 0; i < db.parts.size(); ++i) off_b[i + 1] = off_b[i] + db.parts[i].len;

    std::vector<LambdaMap> out;
    for (std::size_t i = 0; i < da.parts.size(); ++i) {
        const std::size_t pa = da.parts[i].len;
        for (std::size_t j = 0; j < db.parts.size(); ++j) {
            const std::size_t pb = db.parts[j].len;
            const std::size_t kmin = pb > pa ? pb - pa : 0;
            for (std::size_t k = kmin; k < pb; ++k) {
                if (a.alg().graded()) {
                    // Homogeneous of degree 0 forces the shift amount.
                    int need = db.parts[j].top - da.parts[i].top;
                    if (need < 0 || static_cast<std::size_t>(need) != k) continue;
                }
                PrimeMatrix canon(b.dim(), a.dim(), f);
                canon.set_block(off_b[j], off_a[i], block_shift(pa, pb, k, f));
                out.emplace_back(a, b, ub_inv * canon * da.u);
            }
        }
    }
    return out;
}

namespace {

std::vector<int> span_degrees(const PrimeMatrix& cols, const LambdaModule& ambient) {
    std::vector<int> degs;
    if (!ambient.alg().graded()) return degs;
    for (std::size_t c = 0; c < cols.cols(); ++c) {
        int deg = 0;
        bool found = false;
        for (std::size_t i = 0; i < cols.rows(); ++i) {
            if (cols.at(i, c) == 0) continue;
            if (!found) {
                deg = ambient.degrees()[i];
                found = true;
            } else {
                internal_check(ambient.degrees()[i] == deg,
                               "graded subspace basis vector is not homogeneous");
            }
        }
        internal_check(found, "zero column in subspace basis");
        degs.push_back(deg);
    }
    return degs;
}

} // namespace

KernelPair kernel_of(const LambdaMap& f) {
    const LambdaModule& a = f.source();
    PrimeMatrix k = kernel_basis(f.m());
    PrimeMatrix tk(k.cols(), k.cols(), a.alg().field);
    if (k.cols()) {
        auto sol = solve_linear(k, a.t() * k);
        internal_check(sol.has_value(), "kernel is not T invariant");
        tk = *sol;
    }
    LambdaModule mod(a.alg(), tk, span_degrees(k, a));
    return {mod, LambdaMap(mod, a, k)};
}

CokernelPair cokernel_of(const LambdaMap& f) {
    const LambdaModule& b = f.target();
    const Field fld = b.alg().field;
    PrimeMatrix img = column_rref(f.m());

    // Pivot rows of the column-reduced image; the complementary rows index a
    // basis of the quotient.
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < img.cols(); ++c) {
        std::size_t r = 0;
        while (r < img.rows() && img.at(r, c) == 0) ++r;
        internal_check(r < img.rows(), "zero column in reduced image");
        piv.push_back(r);
    }
    std::vector<bool> is_piv(b.dim(), false);
    for (std::size_t r : piv) is_piv[r] = true;
    std::vector<std::size_t> free;
    for (std::size_t r = 0; r < b.dim(); ++r)
        if (!is_piv[r]) free.push_back(r);

    // proj eliminates the pivot coordinates: v - img * (pivot coords of v),
    // restricted to the free rows.
    PrimeMatrix sel_piv(piv.size(), b.dim(), fld);
    for (std::size_t k = 0; k < piv.size(); ++k) sel_piv.set(k, piv[k], 1);
    PrimeMatrix red = PrimeMatrix::identity(b.dim(), fld) - img * sel_piv;
    PrimeMatrix sel_free(free.size(), b.dim(), fld);
    for (std::size_t q = 0; q < free.size(); ++q) sel_free.set(q, free[q], 1);
    PrimeMatrix proj = sel_free * red;

    PrimeMatrix incl(b.dim(), free.size(), fld); // section picking the free coordinates
    for (std::size_t q = 0; q < free.size(); ++q) incl.set(free[q], q, 1);

    PrimeMatrix tc = proj * b.t() * incl;
    std::vector<int> degs;
    if (b.alg().graded())
        for (std::size_t q = 0; q < free.size(); ++q) degs.push_back(b.degrees()[free[q]]);
    LambdaModule mod(b.alg(), tc, std::move(degs));
    LambdaMap p(b, mod, proj);
    internal_check((p.m() * f.m()).is_zero(), "cokernel projection does not kill the image");
    return {mod, p};
}

ImagePair image_of(const LambdaMap& f) {
    const LambdaModule& b = f.target();
    PrimeMatrix img = column_rref(f.m());
    PrimeMatrix ti(img.cols(), img.cols(), b.alg().field);
    if (img.cols()) {
        auto sol = solve_linear(img, b.t() * img);
        internal_check(sol.has_value(), "image is not T invariant");
        ti = *sol;
    }
    LambdaModule mod(b.alg(), ti, span_degrees(img, b));
    auto core = solve_linear(img, f.m());
    internal_check(core.has_value(), "map does not land in its image span");
    return {mod, LambdaMap(mod, b, img), LambdaMap(f.source(), mod, *core)};
}

namespace {

PrimeMatrix vec_of(const PrimeMatrix& m) {
    PrimeMatrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

std::optional<LambdaMap> solve_in_hom(const LambdaModule& src, const LambdaModule& tgt,
                                      const std::vector<PrimeMatrix>& lhs_cols,
                                      const PrimeMatrix& rhs,
                                      const std::vector<LambdaMap>& basis) {
    const Field f = src.alg().field;
    PrimeMatrix sys(rhs.rows() * rhs.cols(), basis.size(), f);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        PrimeMatrix v = vec_of(lhs_cols[c]);
        for (std::size_t r = 0; r < v.rows(); ++r) sys.set(r, c, v.at(r, 0));
    }
    auto sol = solve_linear(sys, vec_of(rhs));
    if (!sol) return std::nullopt;
    PrimeMatrix x(tgt.dim(), src.dim(), f);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        uint32_t coeff = sol->at(c, 0);
        if (coeff) x = x + basis[c].m().scaled(coeff);
    }
    return LambdaMap(src, tgt, x);
}

} // namespace

std::optional<LambdaMap> factor_left(const LambdaMap& g, const LambdaMap& f) {
    internal_check(g.source() == f.source(), "factor_left needs a shared source");
    std::vector<LambdaMap> basis = hom_basis(f.target(), g.target());
    std::vector<PrimeMatrix> cols;
    cols.reserve(basis.size());
    for (const auto& h : basis) cols.push_back(h.m() * f.m());
    return solve_in_hom(f.target(), g.target(), cols, g.m(), basis);
}

std::optional<LambdaMap> factor_right(const LambdaMap& g, const LambdaMap& h) {
    internal_check(g.target() == h.target(), "factor_right needs a shared target");
    std::vector<LambdaMap> basis = hom_basis(g.source(), h.source());
    std::vector<PrimeMatrix> cols;
    cols.reserve(basis.size());
    for (const auto& x : basis) cols.push_back(h.m() * x.m());
    return solve_in_hom(g.source(), h.source(), cols, g.m(), basis);
}

} // namespace arcalc
