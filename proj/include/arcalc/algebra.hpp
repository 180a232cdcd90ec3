#pragma once

#include <cstddef>

#include "arcalc/errors.hpp"
#include "arcalc/field.hpp"

namespace arcalc {

// Two backends share the algebra k[T]/(T^n): the plain commutative uniserial
// algebra, and its graded version where T is homogeneous of degree -1 (the
// doubly infinite line quiver with all paths of length n equal to zero).
enum class Backend { nakayama, graded_line };

struct AlgebraSpec {
    Backend backend;
    std::size_t n;
    Field field;

    AlgebraSpec(Backend b, std::size_t loewy_length, Field f)
        : backend(b), n(loewy_length), field(f) {
        if (n < 1) throw InvalidInput("Loewy length must be at least 1");
    }

    bool graded() const { return backend == Backend::graded_line; }

    bool operator==(const AlgebraSpec& o) const {
        return backend == o.backend && n == o.n && field == o.field;
    }
    bool operator!=(const AlgebraSpec& o) const { return !(*this == o); }
};

} // namespace arcalc
