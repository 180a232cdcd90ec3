#include "arcalc/quiver.hpp"

#include <algorithm>
#include <random>

#include "arcalc/linalg.hpp"

namespace arcalc {

namespace {

constexpr double kSearchBudget = double(1 << 20);

double power_count(std::uint32_t p, std::size_t exponent) {
    double total = 1.0;
    for (std::size_t i = 0; i < exponent; ++i) {
        total *= p;
        if (total > 4 * kSearchBudget) return 4 * kSearchBudget + 1;
    }
    return total;
}

// All non-increasing length multisets with parts in [1, n] and total <= bound.
void ambient_partitions(std::size_t n, std::size_t bound, std::size_t max_len,
                        Partition& cur, std::vector<Partition>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t len = std::min(max_len, std::min(n, bound)); len >= 1; --len) {
        cur.push_back({len, 0});
        ambient_partitions(n, bound - len, len, cur, out);
        cur.pop_back();
    }
}

// Enumerate every k-dimensional subspace of F_p^d once, as the column span of
// the transposed reduced row echelon form, and feed it to `emit`.
template <typename Fn>
void for_each_subspace(std::size_t d, std::size_t k, const Field& f, Fn&& emit) {
    std::vector<std::size_t> pivots(k);
    std::vector<std::size_t> free_pos;
    auto run_pivot_set = [&]() {
        free_pos.clear();
        std::vector<bool> is_pivot(d, false);
        for (std::size_t i = 0; i < k; ++i) is_pivot[pivots[i]] = true;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = pivots[i] + 1; j < d; ++j)
                if (!is_pivot[j]) free_pos.push_back(i * d + j);
        if (power_count(f.modulus(), free_pos.size()) > kSearchBudget)
            throw BudgetExceeded("subspace enumeration is too large for the field size");
        std::vector<std::uint32_t> vals(free_pos.size(), 0);
        for (;;) {
            PrimeMatrix rows(k, d, f);
            for (std::size_t i = 0; i < k; ++i) rows.set(i, pivots[i], 1);
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                rows.set(free_pos[t] / d, free_pos[t] % d, vals[t]);
            emit(rows.transposed());
            std::size_t t = 0;
            while (t < vals.size() && ++vals[t] == f.modulus()) vals[t++] = 0;
            if (t == vals.size()) break;
        }
    };
    // Odometer over increasing pivot position tuples.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > d) return;
    for (;;) {
        pivots = idx;
        run_pivot_set();
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == d - (k - i) - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

PrimeMatrix combine(const std::vector<HMorphism>& basis, const std::vector<std::uint32_t>& c,
                    bool ambient_part, const Field& f) {
    const PrimeMatrix& first = ambient_part ? basis[0].v.m() : basis[0].u.m();
    PrimeMatrix acc = PrimeMatrix::zero(first.rows(), first.cols(), f);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (c[i] == 0) continue;
        acc = acc + (ambient_part ? basis[i].v.m() : basis[i].u.m()).scaled(c[i]);
    }
    return acc;
}

// Fitting split: some power of v has stable rank strictly between 0 and
// dim B, so x decomposes along its image and kernel.
bool fitting_splits(const PrimeMatrix& v, std::size_t amb_dim) {
    if (amb_dim == 0) return false;
    PrimeMatrix p = v;
    for (std::size_t i = 1; i < amb_dim; ++i) p = p * v;
    std::size_t r = rank(p);
    return r > 0 && r < amb_dim;
}

bool has_nontrivial_idempotent(const SObject& x, std::uint64_t seed) {
    std::vector<HMorphism> basis = s_hom_basis(x, x);
    const Field& f = x.amb().alg().field;
    std::size_t amb_dim = x.amb().dim();
    if (basis.size() <= 1) return false;

    for (const HMorphism& e : basis)
        if (fitting_splits(e.v.m(), amb_dim)) return true;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + amb_dim);
    std::uniform_int_distribution<std::uint32_t> coin(0, f.modulus() - 1);
    for (int trial = 0; trial < 16; ++trial) {
        std::vector<std::uint32_t> c(basis.size());
        for (auto& v : c) v = coin(rng);
        if (fitting_splits(combine(basis, c, true, f), amb_dim)) return true;
    }

    if (power_count(f.modulus(), basis.size()) > kSearchBudget)
        throw BudgetExceeded("endomorphism ring too large for exhaustive idempotent search");
    std::vector<std::uint32_t> c(basis.size(), 0);
    for (;;) {
        std::size_t t = 0;
        while (t < c.size() && ++c[t] == f.modulus()) c[t++] = 0;
        if (t == c.size()) break;
        PrimeMatrix v = combine(basis, c, true, f);
        if (v * v != v || v.is_zero() || v.is_identity()) continue;
        PrimeMatrix u = combine(basis, c, false, f);
        if (u * u == u) return true;
    }
    return false;
}

bool exhaustive_isomorphic(const SObject& x, const SObject& y) {
    if (x.sub().dim() != y.sub().dim() || x.amb().dim() != y.amb().dim()) return false;
    std::vector<HMorphism> basis = s_hom_basis(x, y);
    if (basis.empty()) return x.amb().dim() == 0 && x.sub().dim() == 0;
    const Field& f = x.amb().alg().field;
    if (power_count(f.modulus(), basis.size()) > kSearchBudget)
        throw BudgetExceeded("hom space too large for exhaustive isomorphism search");
    std::vector<std::uint32_t> c(basis.size(), 0);
    for (;;) {
        std::size_t t = 0;
        while (t < c.size() && ++c[t] == f.modulus()) c[t++] = 0;
        if (t == c.size()) break;
        PrimeMatrix v = combine(basis, c, true, f);
        if (rank(v) != x.amb().dim()) continue;
        PrimeMatrix u = combine(basis, c, false, f);
        if (rank(u) == x.sub().dim()) return true;
    }
    return false;
}

} // namespace

std::vector<SObject> brute_force_catalog(const AlgebraSpec& alg, std::size_t dim_bound,
                                         std::uint64_t seed) {
    if (alg.graded())
        throw InvalidInput("the brute-force catalog enumerates the plain backend only; "
                           "graded classes repeat along degree shifts");
    std::vector<Partition> ambients;
    Partition cur;
    ambient_partitions(alg.n, dim_bound, alg.n, cur, ambients);

    std::vector<SObject> catalog;
    std::vector<InvariantKey> keys;
    for (const Partition& parts : ambients) {
        LambdaModule b = module_from_partition(alg, parts);
        std::size_t d = b.dim();
        for (std::size_t k = 0; k <= d; ++k) {
            for_each_subspace(d, k, alg.field, [&](const PrimeMatrix& span) {
                std::optional<PrimeMatrix> ts = solve_linear(span, b.t() * span);
                if (!ts) return; // not T-invariant
                LambdaModule a(alg, *ts);
                SObject x(LambdaMap(a, b, span));
                if (has_nontrivial_idempotent(x, seed)) return;
                InvariantKey key = invariant_key(x);
                for (std::size_t i = 0; i < catalog.size(); ++i)
                    if (keys[i] == key && exhaustive_isomorphic(catalog[i], x)) return;
                catalog.push_back(std::move(x));
                keys.push_back(std::move(key));
            });
        }
    }
    std::vector<std::size_t> order(catalog.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });
    std::vector<SObject> sorted;
    sorted.reserve(catalog.size());
    for (std::size_t i : order) sorted.push_back(std::move(catalog[i]));
    return sorted;
}

} // namespace arcalc
