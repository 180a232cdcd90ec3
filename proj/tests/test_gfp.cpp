#include "doctest.h"

#include <random>

#include "arcalc/field.hpp"
#include "arcalc/kernels.hpp"
#include "arcalc/linalg.hpp"
#include "arcalc/matrix.hpp"

using namespace arcalc;

namespace {

PrimeMatrix random_matrix(std::size_t r, std::size_t c, Field f, std::mt19937& g) {
    PrimeMatrix m(r, c, f);
    std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(g));
    return m;
}

// Independent rank oracle: rank = size of the largest square submatrix with
// nonzero determinant, determinants computed by cofactor expansion.  Only
// usable for tiny matrices; that is the point of an oracle.
std::uint32_t minor_det(const PrimeMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const Field& f = m.field();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    std::uint32_t det = 0;
    bool neg = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::size_t> sub_rows;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != i) sub_rows.push_back(rows[k]);
        std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
        std::uint32_t term = f.mul(m.at(rows[i], cols[0]), minor_det(m, sub_rows, sub_cols));
        det = neg ? f.sub(det, term) : f.add(det, term);
        neg = !neg;
    }
    return det;
}

std::size_t rank_by_minors(const PrimeMatrix& m) {
    std::size_t best = 0;
    std::vector<std::size_t> rs, cs;
    // Enumerate all row and column subsets (matrices here are at most 5x5).
    for (unsigned rmask = 1; rmask < (1u << m.rows()); ++rmask)
        for (unsigned cmask = 1; cmask < (1u << m.cols()); ++cmask) {
            rs.clear();
            cs.clear();
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (rmask & (1u << i)) rs.push_back(i);
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (cmask & (1u << j)) cs.push_back(j);
            if (rs.size() != cs.size() || rs.size() <= best) continue;
            if (minor_det(m, rs, cs) != 0) best = rs.size();
        }
    return best;
}

} // namespace

TEST_CASE("field scalar arithmetic") {
    for (std::uint32_t p : {2u, 3u, 101u, 32003u}) {
        Field f(p);
        CHECK(f.add(p - 1, 1) == 0);
        CHECK(f.sub(0, 1) == p - 1);
        CHECK(f.neg(0) == 0);
        for (std::uint32_t a = 1; a < std::min(p, 50u); ++a)
            CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(Field(1), InvalidInput);
    CHECK_THROWS_AS(Field(32004), InvalidInput);  // even
    CHECK_THROWS_AS(Field(32768), InvalidInput);  // out of range
    CHECK_THROWS_AS(Field(15), InvalidInput);     // composite
}

TEST_CASE("kernel variants agree with the scalar reference") {
    std::mt19937 g(12345);
    const auto& tables = all_kernel_tables();
    REQUIRE(!tables.empty());
    CHECK(std::string(tables[0]->name) == "scalar");
    for (std::uint32_t p : {2u, 3u, 32003u, 32749u}) {
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 64u, 301u}) {
            std::vector<std::uint32_t> x(len), y0(len);
            std::vector<std::uint64_t> acc0(len);
            for (std::size_t i = 0; i < len; ++i) {
                x[i] = d(g);
                y0[i] = d(g);
                acc0[i] = std::uint64_t(d(g)) << 17;
            }
            // Boundary values matter for the Barrett paths.
            if (len > 2) {
                x[0] = p - 1;
                y0[0] = p - 1;
                x[1] = 0;
                y0[2] = p - 1;
            }
            for (std::uint32_t c : {std::uint32_t(0), std::uint32_t(1), p - 1, d(g)}) {
                std::vector<std::uint32_t> want_axpy, want_scale, want_red;
                std::vector<std::uint64_t> want_acc;
                for (const KernelTable* t : tables) {
                    auto y = y0;
                    t->axpy(y.data(), x.data(), c, len, p);
                    auto s = y0;
                    t->scale(s.data(), c, len, p);
                    auto acc = acc0;
                    t->accmul(acc.data(), x.data(), c, len);
                    std::vector<std::uint32_t> red(len);
                    t->reduce(red.data(), acc.data(), len, p);
                    if (t == tables[0]) {
                        want_axpy = y;
                        want_scale = s;
                        want_acc = acc;
                        want_red = red;
                    } else {
                        CHECK(y == want_axpy);
                        CHECK(s == want_scale);
                        CHECK(acc == want_acc);
                        CHECK(red == want_red);
                    }
                }
            }
        }
    }
}

TEST_CASE("rref on known matrices") {
    Field f(32003);
    PrimeMatrix a({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, f);
    RrefResult e = rref(a);
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    // rref is idempotent and canonical.
    CHECK(rref(e.r).r == e.r);

    PrimeMatrix z(3, 4, f);
    CHECK(rref(z).rank == 0);
    PrimeMatrix empty(0, 5, f);
    CHECK(rref(empty).rank == 0);
    PrimeMatrix id = PrimeMatrix::identity(4, f);
    CHECK(rref(id).r == id);
}

TEST_CASE("rank agrees with the cofactor-expansion oracle") {
    std::mt19937 g(777);
    for (std::uint32_t p : {2u, 5u, 32003u}) {
        Field f(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + trial % 5, c = 1 + (trial / 3) % 5;
            PrimeMatrix m = random_matrix(r, c, f, g);
            if (trial % 4 == 0 && r > 1) {
                // Force a dependent row to exercise rank deficiency.
                for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, m.at(0, j));
            }
            CHECK(rank(m) == rank_by_minors(m));
        }
    }
}

TEST_CASE("solve_linear finds verified solutions and rejects inconsistent systems") {
    std::mt19937 g(31337);
    Field f(32003);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 6, m = 1 + (trial / 2) % 6;
        PrimeMatrix a = random_matrix(n, m, f, g);
        PrimeMatrix x = random_matrix(m, 2, f, g);
        PrimeMatrix b = a * x;
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
    // Deterministic output: free variables are zero.
    PrimeMatrix a({{1, 1}}, f);
    PrimeMatrix b({{5}}, f);
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(sol->at(0, 0) == 5);
    CHECK(sol->at(1, 0) == 0);
    // Inconsistent system.
    PrimeMatrix a2({{1, 0}, {1, 0}}, f);
    PrimeMatrix b2({{1}, {2}}, f);
    CHECK(!solve_linear(a2, b2).has_value());
}

TEST_CASE("kernel_basis spans the null space (rank-nullity)") {
    std::mt19937 g(2024);
    for (std::uint32_t p : {2u, 32003u}) {
        Field f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = trial % 7, c = 1 + trial % 8;
            PrimeMatrix a = random_matrix(r, c, f, g);
            PrimeMatrix k = kernel_basis(a);
            CHECK(k.cols() == c - rank(a));
            if (k.cols() > 0) CHECK((a * k).is_zero());
            CHECK(rank(k) == k.cols());
        }
    }
}

TEST_CASE("inverse") {
    Field f(32003);
    std::mt19937 g(5);
    for (int trial = 0; trial < 20; ++trial) {
        PrimeMatrix a = random_matrix(4, 4, f, g);
        auto inv = inverse(a);
        if (rank(a) == 4) {
            REQUIRE(inv.has_value());
            CHECK((a * *inv).is_identity());
            CHECK((*inv * a).is_identity());
        } else {
            CHECK(!inv.has_value());
        }
    }
    PrimeMatrix sing(2, 2, f);
    CHECK(!inverse(sing).has_value());
}

TEST_CASE("column_rref is a canonical form for column spans") {
    Field f(32003);
    std::mt19937 g(99);
    for (int trial = 0; trial < 30; ++trial) {
        PrimeMatrix a = random_matrix(5, 3, f, g);
        // Apply random invertible column operations; the span is unchanged.
        PrimeMatrix u = random_matrix(3, 3, f, g);
        while (rank(u) < 3) u = random_matrix(3, 3, f, g);
        CHECK(column_rref(a) == column_rref(a * u));
        CHECK(in_column_span(column_rref(a), a));
    }
}

TEST_CASE("span intersection and sum") {
    Field f(32003);
    PrimeMatrix e1({{1}, {0}, {0}}, f);
    PrimeMatrix e12({{1, 0}, {0, 1}, {0, 0}}, f);
    PrimeMatrix e23({{0, 0}, {1, 0}, {0, 1}}, f);
    PrimeMatrix inter = span_intersection(e12, e23);
    CHECK(inter.cols() == 1);
    CHECK(in_column_span(inter, e12.column(1)));
    CHECK(span_sum(e12, e23).cols() == 3);
    CHECK(span_intersection(e1, e23).cols() == 0);
}

TEST_CASE("matrix product matches naive triple loop") {
    std::mt19937 g(4242);
    for (std::uint32_t p : {2u, 32003u}) {
        Field f(p);
        PrimeMatrix a = random_matrix(7, 9, f, g), b = random_matrix(9, 5, f, g);
        PrimeMatrix c = a * b;
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < 9; ++t)
                    acc += std::uint64_t(a.at(i, t)) * b.at(t, j);
                CHECK(c.at(i, j) == acc % p);
            }
    }
}
