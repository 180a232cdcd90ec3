#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcalc/algebra.hpp"
#include "arcalc/hobjects.hpp"

namespace arcalc {

// Vertex of the Auslander-Reiten quiver.  The stored object is canonicalized
// (both modules are canonical Jordan sums) and the name records discovery
// order, which is deterministic for a fixed algebra and seed.
struct QuiverVertex {
    SObject object;
    std::string name;
    bool projective = false; // equals injective on both supported backends
};

// Arrow x -> y; the multiplicity is the number of copies of x in the middle
// term of the almost split sequence ending at y (for y projective: in rad y).
struct QuiverArrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t multiplicity = 1;

    bool operator==(const QuiverArrow& o) const {
        return source == o.source && target == o.target && multiplicity == o.multiplicity;
    }
};

struct ARQuiver {
    AlgebraSpec alg;
    std::vector<QuiverVertex> vertices;
    std::vector<QuiverArrow> arrows; // sorted by (target, source)
    // translation[c] = index of tau(c); set exactly when the mesh ending at c
    // has been computed, never for projective vertices.
    std::vector<std::optional<std::size_t>> translation;
};

struct KnitOptions {
    std::size_t cutoff = 10000;        // vertex budget
    std::uint64_t seed = 0;            // passed to every randomized kernel
    int degree_window = 6;             // graded: expand only |offset| <= window
    std::optional<double> deadline_seconds; // optional wall-clock budget
};

// `complete` is false when a budget stopped the walk or (graded backend)
// frontier vertices outside the degree window were left unexpanded; the
// report says which.  Budget exceedance is a report, not an error.
struct KnitResult {
    ARQuiver quiver;
    bool complete = false;
    bool budget_exceeded = false;
    std::string report;
};

// Builds the Auslander-Reiten quiver of S(Lambda) by knitting.  Seeds with
// the two indecomposable projectives (Lambda = Lambda) and (0 in Lambda) and
// the radicals (m in Lambda), (0 in m) of their sink maps; then walks the
// translation: for each known vertex A the almost split sequence ending at
// tau^-(A) supplies the mesh middle, whose summands become vertices and
// arrows.  Every vertex lies on a finite translation orbit, so the walk
// closes on finite-type inputs.  On completion each mesh is checked against
// the additivity recurrence: the middle ending at tau^-(A) must equal
// the sum of tau^-(M) over arrows M -> A plus the projectives whose radical
// contains A.
KnitResult knit(const AlgebraSpec& alg, const KnitOptions& opts = {});

// Mesh additivity at every vertex whose mesh is recorded: the multiplicity
// of x -> c equals the multiplicity of tau(c) -> x.  Pairs whose data is
// incomplete (partial quivers) are skipped.
bool mesh_symmetry_holds(const ARQuiver& q);

// Independent oracle for knit: enumerates every T-invariant subspace of
// every canonical ambient module with dim B <= dim_bound, keeps the pairs
// with no nontrivial idempotent endomorphism, and dedups by exhaustive
// isomorphism search.  Uses only linear algebra, none of the Krull-Schmidt
// machinery, so it can run over GF(2).  Plain backend only; throws
// BudgetExceeded when an exhaustive search space passes ~2^20 elements.
std::vector<SObject> brute_force_catalog(const AlgebraSpec& alg, std::size_t dim_bound,
                                         std::uint64_t seed = 0);

enum class QuiverFormat { dot, json };

// Deterministic text form.  DOT: one node per vertex labeled
// "dimA⊆dimB:partitionB/rrefhash", solid arrows with multiplicity labels,
// dashed translation edges.  JSON: {algebra, arrows, translation, vertices}
// with sorted keys; vertices carry enough data to rebuild the objects.
std::string export_quiver(const ARQuiver& q, QuiverFormat format);

// Inverse of the JSON export: parse(export_quiver(q, json)) == q.
ARQuiver import_quiver(const std::string& text);

} // namespace arcalc
