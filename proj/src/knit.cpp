#include "arcalc/quiver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "arcalc/ar.hpp"
#include "arcalc/decompose.hpp"
#include "arcalc/linalg.hpp"
#include "arcalc/minimal.hpp"
#include "arcalc/sequences.hpp"

namespace arcalc {

namespace {

// Conjugate both modules to canonical Jordan sums so the stored vertex data
// (and hence the JSON export) does not depend on how the object was found.
SObject canonical_object(const SObject& x) {
    ModuleDecomposition da = decompose_module(x.sub());
    ModuleDecomposition db = decompose_module(x.amb());
    const AlgebraSpec& alg = x.amb().alg();
    LambdaModule a = module_from_partition(alg, da.parts);
    LambdaModule b = module_from_partition(alg, db.parts);
    PrimeMatrix m = db.u * x.f().m();
    if (x.sub().dim() > 0) m = m * inverse_checked(da.u);
    return SObject(LambdaMap(std::move(a), std::move(b), std::move(m)));
}

// Radical of an indecomposable projective: (m in Lambda) for the identity
// shape, (0 in m) for the pair shape, degree-shifted along with the input.
// Empty when the radical is the zero object.
std::optional<SObject> projective_radical(const SObject& p) {
    const AlgebraSpec& alg = p.amb().alg();
    JordanPart blk = decompose_module(p.amb()).parts.at(0);
    Partition rad_parts;
    if (blk.len > 1) rad_parts.push_back({blk.len - 1, blk.top - 1});
    LambdaModule radm = module_from_partition(alg, rad_parts);
    if (p.sub().dim() == 0) {
        if (radm.dim() == 0) return std::nullopt;
        return SObject(LambdaMap(LambdaModule::zero(alg), radm,
                                 PrimeMatrix::zero(radm.dim(), 0, alg.field)));
    }
    LambdaModule amb = module_from_partition(alg, {blk});
    PrimeMatrix m(amb.dim(), radm.dim(), alg.field);
    for (std::size_t j = 0; j + 1 < blk.len; ++j) m.set(j + 1, j, 1);
    return SObject(LambdaMap(radm, amb, std::move(m)));
}

Partition merged_parts(const LambdaModule& a, const LambdaModule& b) {
    Partition parts = decompose_module(a).parts;
    Partition more = decompose_module(b).parts;
    parts.insert(parts.end(), more.begin(), more.end());
    sort_partition(parts);
    return parts;
}

struct Builder {
    const KnitOptions& opts;
    ARQuiver q;
    std::map<InvariantKey, std::vector<std::size_t>> buckets;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow_mult;
    std::deque<std::size_t> work;
    std::vector<bool> processed;
    std::vector<bool> clipped;

    explicit Builder(const AlgebraSpec& alg, const KnitOptions& o) : opts(o), q{alg, {}, {}, {}} {}

    void add_arrow(std::size_t src, std::size_t tgt, std::size_t mult) {
        arrow_mult[{src, tgt}] += mult;
    }

    std::size_t find_or_add(const SObject& x) {
        InvariantKey key = invariant_key(x);
        std::vector<std::size_t>& bucket = buckets[key];
        for (std::size_t i : bucket)
            if (is_isomorphic(q.vertices[i].object, x, opts.seed)) return i;
        std::size_t idx = q.vertices.size();
        SObject canon = canonical_object(x);
        bool proj = is_projective_object(canon);
        q.vertices.push_back({canon, "v" + std::to_string(idx), proj});
        q.translation.emplace_back();
        processed.push_back(false);
        clipped.push_back(false);
        bucket.push_back(idx);
        work.push_back(idx);
        if (proj) {
            if (std::optional<SObject> rad = projective_radical(canon))
                add_arrow(find_or_add(*rad), idx, 1);
        }
        return idx;
    }
};

} // namespace

KnitResult knit(const AlgebraSpec& alg, const KnitOptions& opts) {
    Builder b(alg, opts);
    const auto start = std::chrono::steady_clock::now();
    auto deadline_passed = [&]() {
        if (!opts.deadline_seconds) return false;
        std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        return used.count() > *opts.deadline_seconds;
    };

    // The two indecomposable projectives in degree zero.
    LambdaModule lam = module_from_partition(alg, {{alg.n, 0}});
    b.find_or_add(SObject(LambdaMap::identity(lam)));
    b.find_or_add(SObject(LambdaMap(LambdaModule::zero(alg), lam,
                                    PrimeMatrix::zero(lam.dim(), 0, alg.field))));

    bool budget = false;
    std::size_t meshes = 0;
    while (!b.work.empty()) {
        if (b.q.vertices.size() > opts.cutoff || deadline_passed()) {
            budget = true;
            break;
        }
        std::size_t a = b.work.front();
        b.work.pop_front();
        if (b.processed[a] || b.q.vertices[a].projective) continue;
        if (alg.graded()) {
            int off = normalize_offset(b.q.vertices[a].object);
            if (off > opts.degree_window || off < -opts.degree_window) {
                b.clipped[a] = true;
                continue;
            }
        }
        b.processed[a] = true;

        SObject end = tau_s(b.q.vertices[a].object, true, opts.seed).value;
        ARSequence seq = ar_sequence(end, opts.seed);
        internal_check(is_isomorphic(seq.left, b.q.vertices[a].object, opts.seed),
                       "mesh left term differs from the vertex being expanded");
        if (end.sub().dim() > 0 && !end.f().is_iso()) {
            internal_check(decompose_module(seq.middle.sub()).parts ==
                               merged_parts(seq.left.sub(), end.sub()),
                           "mesh middle submodule is not the sum of the end submodules");
            internal_check(decompose_module(seq.middle.amb()).parts ==
                               merged_parts(seq.left.amb(), end.amb()),
                           "mesh middle ambient is not the sum of the end ambients");
        }

        std::size_t c = b.find_or_add(end);
        internal_check(!b.q.translation[c], "two meshes claim the same end");
        b.q.translation[c] = a;
        std::map<std::size_t, std::size_t> counts;
        for (const Summand& s : decompose_object(seq.middle, opts.seed).summands)
            ++counts[b.find_or_add(s.piece)];
        for (auto [src, mult] : counts) b.add_arrow(src, c, mult);
        ++meshes;
    }

    KnitResult out{std::move(b.q), false, false, {}};
    for (auto& [key, mult] : b.arrow_mult)
        out.quiver.arrows.push_back({key.first, key.second, mult});
    std::sort(out.quiver.arrows.begin(), out.quiver.arrows.end(),
              [](const QuiverArrow& x, const QuiverArrow& y) {
                  return std::tie(x.target, x.source) < std::tie(y.target, y.source);
              });

    std::size_t skipped = 0;
    for (std::size_t i = 0; i < out.quiver.vertices.size(); ++i)
        if (b.clipped[i] && !b.processed[i]) ++skipped;

    out.budget_exceeded = budget;
    out.complete = !budget && skipped == 0;
    std::ostringstream rep;
    if (out.complete) {
        rep << "complete: " << out.quiver.vertices.size() << " vertices, "
            << out.quiver.arrows.size() << " arrows, " << meshes << " meshes";
        internal_check(mesh_symmetry_holds(out.quiver),
                       "mesh additivity failed on a completed quiver");
    } else if (budget) {
        rep << "budget exceeded (" << (deadline_passed() ? "deadline" : "vertex cutoff")
            << "): " << out.quiver.vertices.size() << " vertices after " << meshes
            << " meshes, " << b.work.size() << " pending";
    } else {
        rep << "partial: " << skipped << " vertices outside degree window "
            << opts.degree_window << " left unexpanded, " << out.quiver.vertices.size()
            << " vertices, " << meshes << " meshes";
    }
    out.report = rep.str();
    return out;
}

bool mesh_symmetry_holds(const ARQuiver& q) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
    for (const QuiverArrow& a : q.arrows) mult[{a.source, a.target}] = a.multiplicity;
    auto get = [&](std::size_t s, std::size_t t) {
        auto it = mult.find({s, t});
        return it == mult.end() ? std::size_t{0} : it->second;
    };
    for (std::size_t c = 0; c < q.vertices.size(); ++c) {
        if (!q.translation[c]) continue;
        std::size_t a = *q.translation[c];
        for (std::size_t x = 0; x < q.vertices.size(); ++x) {
            // Arrows out of `a` into x are fully recorded only once the mesh
            // ending at x is; skip pairs a partial quiver cannot settle.
            if (!q.vertices[x].projective && !q.translation[x]) continue;
            if (get(x, c) != get(a, x)) return false;
        }
    }
    return true;
}

} // namespace arcalc
