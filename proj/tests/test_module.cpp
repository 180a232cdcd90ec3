#include <random>

#include "arcalc/envelopes.hpp"
#include "arcalc/lambda_map.hpp"
#include "arcalc/lambda_module.hpp"
#include "arcalc/linalg.hpp"
#include "arcalc/tau.hpp"
#include "doctest.h"

using namespace arcalc;

namespace {

// ---- oracles ----------------------------------------------------------
// Independent of the block combinatorics used by hom_basis: solve the
// commutation equations T_B X = X T_A entry by entry, adding one constraint
// row per forbidden entry in the graded case.

PrimeMatrix vec_rm(const PrimeMatrix& m) {
    PrimeMatrix v(m.rows() * m.cols(), 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

PrimeMatrix hom_space_oracle(const LambdaModule& a, const LambdaModule& b) {
    const Field f = a.alg().field;
    const std::size_t rows = b.dim(), cols = a.dim();
    const std::size_t unknowns = rows * cols;
    std::vector<std::vector<uint32_t>> eqs;
    auto idx = [&](std::size_t r, std::size_t s) { return r * cols + s; };
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<uint32_t> row(unknowns, 0);
            for (std::size_t k = 0; k < rows; ++k)
                row[idx(k, j)] = f.add(row[idx(k, j)], b.t().at(i, k));
            for (std::size_t k = 0; k < cols; ++k)
                row[idx(i, k)] = f.sub(row[idx(i, k)], a.t().at(k, j));
            eqs.push_back(std::move(row));
        }
    }
    if (a.alg().graded()) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (b.degrees()[i] != a.degrees()[j]) {
                    std::vector<uint32_t> row(unknowns, 0);
                    row[idx(i, j)] = 1;
                    eqs.push_back(std::move(row));
                }
    }
    PrimeMatrix sys(eqs.size(), unknowns, f);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c) sys.set(r, c, eqs[r][c]);
    return kernel_basis(sys); // columns are vectorized solutions
}

// Random invertible homogeneous change of basis, by rejection sampling over
// the entries allowed by the degrees.
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

Partition random_partition(const AlgebraSpec& alg, std::size_t max_parts, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> nparts(1, max_parts);
    std::uniform_int_distribution<std::size_t> len(1, alg.n);
    std::uniform_int_distribution<int> top(-3, 3);
    Partition parts;
    std::size_t count = nparts(rng);
    for (std::size_t i = 0; i < count; ++i)
        parts.push_back({len(rng), alg.graded() ? top(rng) : 0});
    sort_partition(parts);
    return parts;
}

LambdaModule random_module(const AlgebraSpec& alg, std::size_t max_parts, std::mt19937_64& rng,
                           Partition* out_parts = nullptr) {
    Partition parts = random_partition(alg, max_parts, rng);
    if (out_parts) *out_parts = parts;
    LambdaModule canon = module_from_partition(alg, parts);
    PrimeMatrix g = random_degree0_invertible(canon, rng);
    PrimeMatrix t = g * canon.t() * inverse_checked(g);
    return LambdaModule(alg, t, canon.degrees());
}

AlgebraSpec plain(std::size_t n, uint32_t p = 32003) {
    return AlgebraSpec(Backend::nakayama, n, Field(p));
}
AlgebraSpec graded(std::size_t n, uint32_t p = 32003) {
    return AlgebraSpec(Backend::graded_line, n, Field(p));
}

} // namespace

TEST_CASE("module construction and validation") {
    AlgebraSpec alg = plain(3);
    LambdaModule j3 = module_from_partition(alg, {{3, 0}});
    CHECK(j3.dim() == 3);
    CHECK(j3.t().at(1, 0) == 1);
    CHECK(j3.t().at(2, 1) == 1);
    CHECK(j3.t().at(0, 0) == 0);

    // T^n must vanish.
    PrimeMatrix bad = PrimeMatrix::identity(2, alg.field);
    CHECK_THROWS_AS(LambdaModule(alg, bad), InvalidInput);

    // Graded: T must lower degree by exactly one.
    AlgebraSpec galg = graded(3);
    LambdaModule gj2 = module_from_partition(galg, {{2, 5}});
    CHECK(gj2.degrees() == std::vector<int>{5, 4});
    CHECK_THROWS_AS(LambdaModule(galg, gj2.t(), std::vector<int>{5, 5}), InvalidInput);
    CHECK_THROWS_AS(LambdaModule(galg, gj2.t(), std::vector<int>{5}), InvalidInput);

    CHECK(partition_to_string({{3, 0}, {1, 0}}, false) == "[3,1]");
    CHECK(partition_to_string({{3, 2}, {1, -1}}, true) == "[3<2>,1<-1>]");
}

TEST_CASE("decompose_module recovers the partition of a random conjugate") {
    std::mt19937_64 rng(7);
    for (auto alg : {plain(1), plain(2), plain(4), graded(3), graded(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            Partition parts;
            LambdaModule m = random_module(alg, 4, rng, &parts);
            ModuleDecomposition dec = decompose_module(m);
            REQUIRE(dec.parts.size() == parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) {
                CHECK(dec.parts[i].len == parts[i].len);
                if (alg.graded()) CHECK(dec.parts[i].top == parts[i].top);
            }
            // u conjugates the action onto the canonical form.
            LambdaModule canon = module_from_partition(alg, dec.parts);
            CHECK(dec.u * m.t() == canon.t() * dec.u);
            CHECK(rank(dec.u) == m.dim());
        }
    }
}

TEST_CASE("decompose_module handles the zero module and single blocks") {
    AlgebraSpec alg = plain(2);
    CHECK(decompose_module(LambdaModule::zero(alg)).parts.empty());
    ModuleDecomposition dec = decompose_module(module_from_partition(alg, {{2, 0}}));
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].len == 2);
}

TEST_CASE("hom_basis agrees with the entrywise commutation oracle") {
    std::mt19937_64 rng(11);
    for (auto alg : {plain(2), plain(3), graded(3), graded(4)}) {
        for (int trial = 0; trial < 12; ++trial) {
            LambdaModule a = random_module(alg, 3, rng);
            LambdaModule b = random_module(alg, 3, rng);
            std::vector<LambdaMap> basis = hom_basis(a, b);
            PrimeMatrix oracle = hom_space_oracle(a, b);
            REQUIRE(basis.size() == oracle.cols());
            if (basis.empty()) continue;
            PrimeMatrix stacked(a.dim() * b.dim(), basis.size(), alg.field);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                PrimeMatrix v = vec_rm(basis[c].m());
                CHECK(in_column_span(oracle, v));
                for (std::size_t r = 0; r < v.rows(); ++r) stacked.set(r, c, v.at(r, 0));
            }
            CHECK(rank(stacked) == basis.size());
        }
    }
}

TEST_CASE("hom dimension between blocks is min(i, j)") {
    AlgebraSpec alg = plain(4);
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; j <= 4; ++j) {
            LambdaModule a = module_from_partition(alg, {{i, 0}});
            LambdaModule b = module_from_partition(alg, {{j, 0}});
            CHECK(hom_basis(a, b).size() == std::min(i, j));
        }
}

TEST_CASE("graded hom between blocks is at most one dimensional") {
    AlgebraSpec alg = graded(4);
    LambdaModule a = module_from_partition(alg, {{3, 0}});
    // Shift maps J_3<0> -> J_4<d> exist only when the shift k = d matches
    // 4 - 3 <= ... <= 3, i.e. d in {1, 2, 3}.
    for (int d = -2; d <= 5; ++d) {
        LambdaModule b = module_from_partition(alg, {{4, d}});
        std::size_t expect = (d >= 1 && d <= 3) ? 1 : 0;
        CHECK(hom_basis(a, b).size() == expect);
    }
}

TEST_CASE("kernel, image and cokernel satisfy the exactness bookkeeping") {
    std::mt19937_64 rng(23);
    for (auto alg : {plain(3), graded(4)}) {
        for (int trial = 0; trial < 15; ++trial) {
            LambdaModule a = random_module(alg, 3, rng);
            LambdaModule b = random_module(alg, 3, rng);
            std::vector<LambdaMap> basis = hom_basis(a, b);
            LambdaMap f = LambdaMap::zero(a, b);
            std::uniform_int_distribution<uint32_t> pick(0, alg.field.modulus() - 1);
            for (const auto& h : basis) f = add(f, scale_map(h, pick(rng)));

            KernelPair k = kernel_of(f);
            ImagePair im = image_of(f);
            CokernelPair c = cokernel_of(f);
            CHECK(k.mod.dim() + im.mod.dim() == a.dim());
            CHECK(im.mod.dim() + c.mod.dim() == b.dim());
            CHECK(k.incl.is_monic());
            CHECK(c.proj.is_epic());
            CHECK(compose(f, k.incl).is_zero());
            CHECK(compose(c.proj, f).is_zero());
            CHECK(compose(im.incl, im.corestr) == f);
        }
    }
}

TEST_CASE("factor_left and factor_right solve and reject correctly") {
    AlgebraSpec alg = plain(3);
    LambdaModule j3 = module_from_partition(alg, {{3, 0}});
    LambdaModule j2 = module_from_partition(alg, {{2, 0}});
    LambdaModule j1 = module_from_partition(alg, {{1, 0}});

    // trunc32: J_3 -> J_2 and trunc31: J_3 -> J_1 with trunc31 = trunc21 . trunc32.
    LambdaMap trunc32(j3, j2, PrimeMatrix({{1, 0, 0}, {0, 1, 0}}, alg.field));
    LambdaMap trunc31(j3, j1, PrimeMatrix({{1, 0, 0}}, alg.field));
    auto x = factor_left(trunc31, trunc32);
    REQUIRE(x.has_value());
    CHECK(compose(*x, trunc32) == trunc31);

    // The socle embedding J_1 -> J_3 does not factor through trunc31 backwards:
    // solve trunc31 . y = id_{J_1} is fine (sections exist as linear maps?) ->
    // actually no module section exists: J_1 is not a summand of J_3.
    LambdaMap id1 = LambdaMap::identity(j1);
    CHECK_FALSE(factor_right(id1, trunc31).has_value());

    // The socle embedding J_1 -> J_2 does not lift through trunc32 either: a
    // module map J_1 -> J_3 lands in the socle, which the truncation kills.
    LambdaMap soc13(j1, j3, PrimeMatrix({{0}, {0}, {1}}, alg.field));
    LambdaMap soc12(j1, j2, PrimeMatrix({{0}, {1}}, alg.field));
    CHECK_FALSE(factor_right(soc12, trunc32).has_value());

    // Multiplication by T on J_2 does lift, via the shift J_2 -> J_3.
    LambdaMap mult_t(j2, j2, j2.t());
    auto y = factor_right(mult_t, trunc32);
    REQUIRE(y.has_value());
    CHECK(compose(trunc32, *y) == mult_t);
    CHECK(factor_left(soc13, soc12).has_value()); // extension along a mono exists
}

TEST_CASE("projective cover and injective envelope of blocks") {
    for (std::size_t n : {2u, 3u, 5u}) {
        AlgebraSpec alg = plain(n);
        for (std::size_t i = 1; i <= n; ++i) {
            LambdaModule ji = module_from_partition(alg, {{i, 0}});
            CoverPair pc = projective_cover(ji);
            CHECK(decompose_module(pc.mod).parts == Partition{{n, 0}});
            CHECK(pc.map.is_epic());
            EnvelopePair ie = injective_envelope(ji);
            CHECK(decompose_module(ie.mod).parts == Partition{{n, 0}});
            CHECK(ie.map.is_monic());
        }
    }
}

TEST_CASE("graded cover sits in the same top degree, the envelope n - i higher") {
    AlgebraSpec alg = graded(4);
    for (std::size_t i = 1; i <= 4; ++i) {
        for (int d : {-2, 0, 3}) {
            LambdaModule ji = module_from_partition(alg, {{i, d}});
            CHECK(decompose_module(projective_cover(ji).mod).parts == Partition{{4, d}});
            CHECK(decompose_module(injective_envelope(ji).mod).parts ==
                  Partition{{4, d + static_cast<int>(4 - i)}});
        }
    }
}

TEST_CASE("cover and envelope of random modules are minimal") {
    std::mt19937_64 rng(31);
    for (auto alg : {plain(3), graded(4)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Partition parts;
            LambdaModule m = random_module(alg, 3, rng, &parts);
            CoverPair pc = projective_cover(m);
            CHECK(pc.mod.dim() == alg.n * parts.size());
            EnvelopePair ie = injective_envelope(m);
            CHECK(ie.mod.dim() == alg.n * parts.size());
        }
    }
}

TEST_CASE("nu is the identity on plain projectives and a degree shift on graded ones") {
    AlgebraSpec alg = plain(3);
    LambdaModule p = module_from_partition(alg, {{3, 0}, {3, 0}});
    CHECK(nu_projective(p) == p);

    AlgebraSpec galg = graded(3);
    LambdaModule gp = module_from_partition(galg, {{3, 1}});
    CHECK(decompose_module(nu_projective(gp)).parts == Partition{{3, 3}});
    CHECK(nu_inverse_injective(nu_projective(gp)) == gp);

    LambdaModule j2 = module_from_partition(galg, {{2, 0}});
    CHECK_THROWS_AS(nu_projective(j2), InternalCheckFailure);
}

TEST_CASE("syzygies of blocks") {
    // Omega(J_i) = J_{n-i} and the cosyzygy undoes it; on the graded backend
    // Omega(J_i<d>) = J_{n-i}<d-i> and Omega^{-1}(J_i<d>) = J_{n-i}<d+n-i>.
    AlgebraSpec alg = plain(5);
    for (std::size_t i = 1; i < 5; ++i) {
        LambdaModule ji = module_from_partition(alg, {{i, 0}});
        CHECK(decompose_module(omega_module(ji, 1)).parts == Partition{{5 - i, 0}});
        CHECK(decompose_module(omega_module(ji, -1)).parts == Partition{{5 - i, 0}});
        CHECK(decompose_module(omega_module(ji, 2)).parts == Partition{{i, 0}});
    }
    CHECK(omega_module(module_from_partition(alg, {{5, 0}}), 1).dim() == 0);

    AlgebraSpec galg = graded(5);
    for (std::size_t i = 1; i < 5; ++i) {
        for (int d : {-1, 0, 2}) {
            LambdaModule ji = module_from_partition(galg, {{i, d}});
            CHECK(decompose_module(omega_module(ji, 1)).parts ==
                  Partition{{5 - i, d - static_cast<int>(i)}});
            CHECK(decompose_module(omega_module(ji, -1)).parts ==
                  Partition{{5 - i, d + static_cast<int>(5 - i)}});
            // Omega^{-2} is the degree shift by n.
            CHECK(decompose_module(omega_module(ji, -2)).parts == Partition{{i, d + 5}});
        }
    }
}

TEST_CASE("tau of modules: identity on non-projective blocks, degree -1 shift graded") {
    AlgebraSpec alg = plain(4);
    for (std::size_t i = 1; i < 4; ++i) {
        LambdaModule ji = module_from_partition(alg, {{i, 0}});
        CHECK(decompose_module(tau_module(ji)).parts == Partition{{i, 0}});
        CHECK(decompose_module(tau_module(ji, true)).parts == Partition{{i, 0}});
    }
    CHECK(tau_module(module_from_partition(alg, {{4, 0}})).dim() == 0);

    AlgebraSpec galg = graded(4);
    for (std::size_t i = 1; i < 4; ++i) {
        for (int d : {-2, 0, 1}) {
            LambdaModule ji = module_from_partition(galg, {{i, d}});
            CHECK(decompose_module(tau_module(ji)).parts == Partition{{i, d - 1}});
            CHECK(decompose_module(tau_module(ji, true)).parts == Partition{{i, d + 1}});
        }
    }
}

TEST_CASE("tau and its inverse cancel on random conjugates") {
    std::mt19937_64 rng(43);
    for (auto alg : {plain(3), graded(4)}) {
        for (int trial = 0; trial < 8; ++trial) {
            LambdaModule m = random_module(alg, 3, rng);
            // Drop projective blocks: tau kills them.
            Partition nonproj;
            for (const auto& p : decompose_module(m).parts)
                if (p.len < alg.n) nonproj.push_back(p);
            LambdaModule core = module_from_partition(alg, nonproj);
            Partition back = decompose_module(tau_module(tau_module(core), true)).parts;
            CHECK(back == nonproj);
        }
    }
}

TEST_CASE("tau_map on a truncation of the free module") {
    // g: J_3 -> J_2 (truncation) at n = 3.  tau(J_3) = 0, tau(J_2) = J_2, so
    // the translate is the zero map 0 -> J_2.
    AlgebraSpec alg = plain(3);
    LambdaModule j3 = module_from_partition(alg, {{3, 0}});
    LambdaModule j2 = module_from_partition(alg, {{2, 0}});
    LambdaMap g(j3, j2, PrimeMatrix({{1, 0, 0}, {0, 1, 0}}, alg.field));
    TauMapResult r = tau_map(g);
    CHECK(r.map.source().dim() == 0);
    CHECK(decompose_module(r.map.target()).parts == Partition{{2, 0}});
    REQUIRE(r.pres.has_value());
    CHECK(compose(r.pres->t, r.pres->s) == r.pres->d);

    // Inverse direction on the socle embedding J_2 -> J_3: both translates of
    // the ends are as for modules and the map stays monic.
    LambdaMap soc(j2, j3, PrimeMatrix({{0, 0}, {1, 0}, {0, 1}}, alg.field));
    TauMapResult ri = tau_map(soc, true);
    CHECK(decompose_module(ri.map.source()).parts == Partition{{2, 0}});
    CHECK(ri.map.target().dim() == 0);
}

TEST_CASE("tau_map of an isomorphism is an isomorphism") {
    std::mt19937_64 rng(51);
    for (auto alg : {plain(3), graded(3)}) {
        LambdaModule j2 = random_module(alg, 1, rng);
        while (decompose_module(j2).parts[0].len == alg.n) j2 = random_module(alg, 1, rng);
        LambdaMap id = LambdaMap::identity(j2);
        TauMapResult r = tau_map(id);
        CHECK(r.map.is_iso());
        TauMapResult ri = tau_map(id, true);
        CHECK(ri.map.is_iso());
    }
}

TEST_CASE("strip removes exactly the full blocks") {
    AlgebraSpec alg = plain(3);
    LambdaModule src = module_from_partition(alg, {{3, 0}, {1, 0}});
    LambdaModule tgt = module_from_partition(alg, {{3, 0}});
    // Map [identity on J_3, socle embedding of J_1].
    PrimeMatrix m(3, 4, alg.field);
    m.set(0, 0, 1);
    m.set(1, 1, 1);
    m.set(2, 2, 1);
    m.set(2, 3, 1);
    LambdaMap f(src, tgt, m);
    StripResult s = strip_injectives(f);
    CHECK(s.map.source().dim() == 1);
    CHECK(s.map.target().dim() == 0);
    CHECK(s.dropped_source == Partition{{3, 0}});
    CHECK(s.dropped_target == Partition{{3, 0}});
}

TEST_CASE("factorization through injectives and projectives") {
    AlgebraSpec alg = plain(3);
    LambdaModule j1 = module_from_partition(alg, {{1, 0}});
    LambdaModule j3 = module_from_partition(alg, {{3, 0}});

    // The socle embedding is an injective envelope, so it factors trivially.
    LambdaMap soc(j1, j3, PrimeMatrix({{0}, {0}, {1}}, alg.field));
    CHECK(through_injective(soc).has_value());
    // The identity of J_1 factors through neither.
    LambdaMap id1 = LambdaMap::identity(j1);
    CHECK_FALSE(through_injective(id1).has_value());
    CHECK_FALSE(through_projective(id1).has_value());
    // The truncation J_3 -> J_1 factors through the projective cover of J_1.
    LambdaMap trunc(j3, j1, PrimeMatrix({{1, 0, 0}}, alg.field));
    CHECK(through_projective(trunc).has_value());
    auto w = through_injective(trunc);
    // soc . trunc also factors through an injective: J_3 is injective.
    LambdaMap both = compose(soc, trunc);
    CHECK(through_injective(both).has_value());
    (void)w;
}

TEST_CASE("loewy length one: everything is projective and tau vanishes") {
    AlgebraSpec alg = plain(1);
    LambdaModule k2 = module_from_partition(alg, {{1, 0}, {1, 0}});
    CHECK(is_projective_module(k2));
    CHECK(tau_module(k2).dim() == 0);
    CHECK(omega_module(k2, 1).dim() == 0);
}
