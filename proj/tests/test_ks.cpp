#include <random>
#include <set>

#include "arcalc/decompose.hpp"
#include "arcalc/endo.hpp"
#include "arcalc/envelopes.hpp"
#include "arcalc/lambda_module.hpp"
#include "arcalc/linalg.hpp"
#include "doctest.h"

using namespace arcalc;

namespace {

AlgebraSpec plain(std::size_t n, uint32_t p = 32003) {
    return AlgebraSpec(Backend::nakayama, n, Field(p));
}
AlgebraSpec graded(std::size_t n, uint32_t p = 32003) {
    return AlgebraSpec(Backend::graded_line, n, Field(p));
}

SObject zero_sub_object(const LambdaModule& amb) {
    LambdaModule z = LambdaModule::zero(amb.alg());
    return SObject(LambdaMap(z, amb, PrimeMatrix(amb.dim(), 0, amb.alg().field)));
}

SObject block_object(const AlgebraSpec& alg, std::size_t sub_len, std::size_t amb_len,
                     int top = 0) {
    LambdaModule amb = module_from_partition(alg, {{amb_len, top}});
    if (sub_len == 0) return zero_sub_object(amb);
    LambdaModule sub = module_from_partition(
        alg, {{sub_len, top - static_cast<int>(amb_len - sub_len)}});
    PrimeMatrix m(amb_len, sub_len, alg.field);
    for (std::size_t i = 0; i < sub_len; ++i) m.set(amb_len - sub_len + i, i, 1);
    return SObject(LambdaMap(sub, amb, m));
}

PrimeMatrix random_degree0_invertible(const LambdaModule& m, std::mt19937_64& rng) {
    const Field f = m.alg().field;
    const std::size_t d = m.dim();
    std::uniform_int_distribution<uint32_t> pick(0, f.modulus() - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        PrimeMatrix g(d, d, f);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (m.alg().graded() && m.degrees()[i] != m.degrees()[j]) continue;
                g.set(i, j, pick(rng));
            }
        if (rank(g) == d) return g;
    }
    return PrimeMatrix::identity(d, f);
}

SObject conjugate_object(const SObject& x, std::mt19937_64& rng) {
    PrimeMatrix g = random_degree0_invertible(x.amb(), rng);
    LambdaModule amb(x.amb().alg(), g * x.amb().t() * inverse_checked(g), x.amb().degrees());
    return SObject(LambdaMap(x.sub(), amb, g * x.f().m()));
}

// The indecomposable pairs with a single ambient block, plus one with two
// blocks, enough variety for sum-and-recover tests.
std::vector<SObject> small_catalog(const AlgebraSpec& alg) {
    std::vector<SObject> cat;
    for (std::size_t amb = 1; amb <= alg.n; ++amb)
        for (std::size_t sub = 0; sub <= amb; ++sub) cat.push_back(block_object(alg, sub, amb));
    return cat;
}

} // namespace

TEST_CASE("endomorphism rings of single block pairs") {
    AlgebraSpec alg = plain(3);

    // For a pair of Jordan blocks the ambient endomorphisms all preserve the
    // canonical submodule, so dim End equals dim End of the ambient.
    for (std::size_t amb = 1; amb <= 3; ++amb)
        for (std::size_t sub = 0; sub <= amb; ++sub) {
            SObject x = block_object(alg, sub, amb);
            EndoRing e = endo_ring(x);
            CHECK(e.dim() == amb);
            CHECK(is_local_ring(e));
        }
}

TEST_CASE("endomorphism ring structure constants") {
    AlgebraSpec alg = plain(3);
    SObject x = block_object(alg, 1, 3);
    EndoRing e = endo_ring(x);

    // The identity coefficients reproduce the identity morphism.
    HMorphism one = combine_morphisms(x.h, x.h, e.basis, e.one);
    CHECK(one.u.m().is_identity());
    CHECK(one.v.m().is_identity());

    // Structure constants agree with actual composition.
    for (std::size_t i = 0; i < e.dim(); ++i)
        for (std::size_t j = 0; j < e.dim(); ++j) {
            PrimeMatrix ei(e.dim(), 1, e.field), ej(e.dim(), 1, e.field);
            ei.set(i, 0, 1);
            ej.set(j, 0, 1);
            HMorphism prod = combine_morphisms(x.h, x.h, e.basis, endo_mult(e, ei, ej));
            CHECK(prod.v.m() == e.basis[i].v.m() * e.basis[j].v.m());
        }

    // End of a pair of two isomorphic blocks is not local.
    SObject dbl = direct_sum_s(x, x);
    CHECK_FALSE(is_local_ring(endo_ring(dbl)));

    // Radical of a local basic ring here: everything except the identity
    // span, so its dimension is dim - 1.
    CHECK(e.radical.cols() == e.dim() - 1);
}

TEST_CASE("small characteristic is refused") {
    AlgebraSpec alg = plain(2, 3);
    SObject x = block_object(alg, 0, 2);
    CHECK_THROWS_AS(endo_ring(x), InvalidInput);
}

TEST_CASE("decompose single indecomposables") {
    for (AlgebraSpec alg : {plain(3), graded(3)}) {
        for (const SObject& x : small_catalog(alg)) {
            Decomposition d = decompose_object(x);
            REQUIRE(d.summands.size() == 1);
            CHECK(is_isomorphic(d.summands[0].piece, x));
        }
    }
}

TEST_CASE("decompose recovers shuffled direct sums") {
    std::mt19937_64 rng(4242);
    for (AlgebraSpec alg : {plain(2), plain(3), plain(4), graded(3)}) {
        std::vector<SObject> cat = small_catalog(alg);
        std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
        std::uniform_int_distribution<std::size_t> count(2, 4);
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t k = count(rng);
            std::vector<std::size_t> chosen{pick(rng)};
            SObject sum = cat[chosen[0]];
            for (std::size_t i = 1; i < k; ++i) {
                chosen.push_back(pick(rng));
                sum = direct_sum_s(sum, cat[chosen.back()]);
            }
            SObject hidden = conjugate_object(sum, rng);

            Decomposition dec = decompose_object(hidden, trial);
            REQUIRE(dec.summands.size() == chosen.size());

            std::vector<bool> used(chosen.size(), false);
            for (const auto& s : dec.summands) {
                bool matched = false;
                for (std::size_t i = 0; i < chosen.size(); ++i) {
                    if (used[i]) continue;
                    if (is_isomorphic(s.piece, cat[chosen[i]])) {
                        used[i] = true;
                        matched = true;
                        break;
                    }
                }
                CHECK(matched);
            }

            // Every piece is certified indecomposable.
            for (const auto& s : dec.summands) CHECK(is_local_ring(endo_ring(s.piece)));
        }
    }
}

TEST_CASE("isomorphism test separates the small catalog") {
    for (AlgebraSpec alg : {plain(3), graded(3)}) {
        std::vector<SObject> cat = small_catalog(alg);
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = 0; j < cat.size(); ++j) {
                bool expect = i == j;
                CHECK(is_isomorphic(cat[i], cat[j]) == expect);
            }
    }
}

TEST_CASE("isomorphism is conjugation invariant") {
    std::mt19937_64 rng(99);
    for (AlgebraSpec alg : {plain(3), graded(4)}) {
        for (const SObject& x : small_catalog(alg)) {
            SObject moved = conjugate_object(x, rng);
            CHECK(is_isomorphic(x, moved));
        }
    }
}

TEST_CASE("graded shifts are not isomorphic") {
    AlgebraSpec alg = graded(3);
    SObject x = block_object(alg, 1, 3, 0);
    SObject y = block_object(alg, 1, 3, 1);
    CHECK_FALSE(is_isomorphic(x, y));
    CHECK(is_isomorphic(shift_object(x, 1), y));
}

TEST_CASE("zero object decomposition") {
    AlgebraSpec alg = plain(3);
    SObject z = zero_sub_object(LambdaModule::zero(alg));
    CHECK(decompose_object(z).summands.empty());
    CHECK(is_isomorphic(z, z));
    CHECK_FALSE(is_isomorphic(z, block_object(alg, 0, 1)));
}

TEST_CASE("decomposition of a diagonal submodule in a double block") {
    // The diagonal socle inside J2 + J2 is carried to a summand splitting
    // with one (J1 c J2) piece and one (0 c J2) piece.
    AlgebraSpec alg = plain(2);
    LambdaModule j2 = module_from_partition(alg, {{2, 0}});
    LambdaModule amb = direct_sum_module(j2, j2);
    LambdaModule j1 = module_from_partition(alg, {{1, 0}});
    PrimeMatrix diag(4, 1, alg.field);
    diag.set(1, 0, 1);
    diag.set(3, 0, 1);
    SObject x(LambdaMap(j1, amb, diag));

    Decomposition dec = decompose_object(x);
    REQUIRE(dec.summands.size() == 2);
    std::multiset<std::size_t> subs, ambs;
    for (const auto& s : dec.summands) {
        subs.insert(s.piece.sub().dim());
        ambs.insert(s.piece.amb().dim());
    }
    CHECK(subs == std::multiset<std::size_t>({0, 1}));
    CHECK(ambs == std::multiset<std::size_t>({2, 2}));
}
