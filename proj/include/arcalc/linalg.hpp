#pragma once

#include <optional>
#include <vector>

#include "arcalc/matrix.hpp"

namespace arcalc {

struct RrefResult {
    PrimeMatrix r;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank;
};

// Reduced row echelon form with deterministic leftmost-pivot selection:
// pivots are scanned column by column, taking the first usable row.
RrefResult rref(const PrimeMatrix& a);

std::size_t rank(const PrimeMatrix& a);

// Solves A*X = B.  Returns the unique solution with every free variable set
// to zero, or nullopt when the system is inconsistent.  The returned value
// is verified by substitution before being handed out.
std::optional<PrimeMatrix> solve_linear(const PrimeMatrix& a, const PrimeMatrix& b);

// Columns form a deterministic basis of the null space {x : A*x = 0},
// ordered by ascending free-column index.
PrimeMatrix kernel_basis(const PrimeMatrix& a);

std::optional<PrimeMatrix> inverse(const PrimeMatrix& a);

// Inverse of a matrix known to be invertible; throws InternalCheckFailure
// otherwise.
PrimeMatrix inverse_checked(const PrimeMatrix& a);

// Canonical basis of the column span: unique column-echelon form with zero
// columns dropped.  Two matrices have equal column span iff these agree.
PrimeMatrix column_rref(const PrimeMatrix& a);

// Does every column of v lie in the column span of basis?
bool in_column_span(const PrimeMatrix& basis, const PrimeMatrix& v);

// Intersection of two column spans, as a canonical column basis.
PrimeMatrix span_intersection(const PrimeMatrix& a, const PrimeMatrix& b);

// Canonical basis of the sum of two column spans.
PrimeMatrix span_sum(const PrimeMatrix& a, const PrimeMatrix& b);

} // namespace arcalc
