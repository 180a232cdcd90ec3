#include "arcalc/linalg.hpp"

#include <algorithm>

#include "arcalc/errors.hpp"
#include "arcalc/kernels.hpp"

namespace arcalc {

RrefResult rref(const PrimeMatrix& a) {
    RrefResult res{a, {}, 0};
    PrimeMatrix& m = res.r;
    const Field f = a.field();
    const std::uint32_t p = f.modulus();
    const std::size_t nr = m.rows(), nc = m.cols();
    const KernelTable& k = kernels();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m.at(piv, col) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != row)
            for (std::size_t j = 0; j < nc; ++j) {
                std::uint32_t t = m.at(row, j);
                m.set(row, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        std::uint32_t inv = f.inv(m.at(row, col));
        if (inv != 1) k.scale(m.row_ptr(row), inv, nc, p);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row) continue;
            std::uint32_t c = m.at(i, col);
            if (c) k.axpy(m.row_ptr(i), m.row_ptr(row), p - c, nc, p);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank(const PrimeMatrix& a) { return rref(a).rank; }

std::optional<PrimeMatrix> solve_linear(const PrimeMatrix& a, const PrimeMatrix& b) {
    internal_check(a.rows() == b.rows(), "solve_linear shape mismatch");
    RrefResult e = rref(PrimeMatrix::hstack(a, b));
    // A pivot in the B block means an inconsistent row.
    for (std::size_t pc : e.pivots)
        if (pc >= a.cols()) return std::nullopt;
    PrimeMatrix x(a.cols(), b.cols(), a.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(e.pivots[i], j, e.r.at(i, a.cols() + j));
    internal_check(a * x == b, "solve_linear produced an unverified solution");
    return x;
}

PrimeMatrix kernel_basis(const PrimeMatrix& a) {
    RrefResult e = rref(a);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (pi < e.pivots.size() && e.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    const Field f = a.field();
    PrimeMatrix kb(a.cols(), free_cols.size(), f);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        kb.set(fc, j, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            kb.set(e.pivots[i], j, f.neg(e.r.at(i, fc)));
    }
    return kb;
}

std::optional<PrimeMatrix> inverse(const PrimeMatrix& a) {
    internal_check(a.rows() == a.cols(), "inverse of non-square matrix");
    auto x = solve_linear(a, PrimeMatrix::identity(a.rows(), a.field()));
    if (!x) return std::nullopt;
    if (!((*x) * a).is_identity()) return std::nullopt;  // rank-deficient
    return x;
}

PrimeMatrix column_rref(const PrimeMatrix& a) {
    RrefResult e = rref(a.transposed());
    return e.r.block(0, 0, e.rank, a.rows()).transposed();
}

bool in_column_span(const PrimeMatrix& basis, const PrimeMatrix& v) {
    return solve_linear(basis, v).has_value();
}

PrimeMatrix span_sum(const PrimeMatrix& a, const PrimeMatrix& b) {
    return column_rref(PrimeMatrix::hstack(a, b));
}

PrimeMatrix span_intersection(const PrimeMatrix& a, const PrimeMatrix& b) {
    internal_check(a.rows() == b.rows(), "span_intersection ambient mismatch");
    // Null space of [A | B] encodes the relations A*x = -B*y; A*x runs over
    // the intersection.
    if (a.cols() == 0 || b.cols() == 0)
        return PrimeMatrix(a.rows(), 0, a.field());
    PrimeMatrix rel = kernel_basis(PrimeMatrix::hstack(a, b));
    PrimeMatrix xs = rel.block(0, 0, a.cols(), rel.cols());
    return column_rref(a * xs);
}

PrimeMatrix inverse_checked(const PrimeMatrix& a) {
    auto inv = inverse(a);
    internal_check(inv.has_value(), "matrix expected to be invertible is singular");
    return *inv;
}

} // namespace arcalc
