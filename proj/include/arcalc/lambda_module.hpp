#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arcalc/algebra.hpp"
#include "arcalc/matrix.hpp"

namespace arcalc {

// One Jordan block J_len of the nilpotent operator T.  On the graded backend
// the block is the interval module with generator in degree `top` and socle in
// degree top - len + 1 (T lowers degree by one).  On the plain backend `top`
// is always 0.
struct JordanPart {
    std::size_t len = 0;
    int top = 0;

    bool operator==(const JordanPart& o) const { return len == o.len && top == o.top; }
    bool operator!=(const JordanPart& o) const { return !(*this == o); }
};

using Partition = std::vector<JordanPart>;

// Canonical order: longer blocks first, ties by ascending top degree.
void sort_partition(Partition& parts);
bool partition_less(const JordanPart& a, const JordanPart& b);
std::string partition_to_string(const Partition& parts, bool graded);
std::size_t partition_dim(const Partition& parts);

// A finite dimensional module over k[T]/(T^n), given by the action of T on a
// chosen basis (maps act on column vectors).  Graded modules also carry the
// degree of each basis vector; T must be homogeneous of degree -1.
class LambdaModule {
public:
    LambdaModule(AlgebraSpec alg, PrimeMatrix t, std::vector<int> degrees = {});

    static LambdaModule zero(const AlgebraSpec& alg);

    const AlgebraSpec& alg() const { return alg_; }
    const PrimeMatrix& t() const { return t_; }
    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t dim() const { return t_.rows(); }

    bool operator==(const LambdaModule& o) const {
        return alg_ == o.alg_ && t_ == o.t_ && degrees_ == o.degrees_;
    }
    bool operator!=(const LambdaModule& o) const { return !(*this == o); }

private:
    AlgebraSpec alg_;
    PrimeMatrix t_;
    std::vector<int> degrees_;
};

// The direct sum of canonical Jordan blocks described by `parts`.
LambdaModule module_from_partition(const AlgebraSpec& alg, const Partition& parts);
LambdaModule direct_sum_module(const LambdaModule& a, const LambdaModule& b);

struct ModuleDecomposition {
    Partition parts;   // canonical order
    PrimeMatrix u;     // iso M -> module_from_partition(parts): u t u^{-1} canonical
};

// Jordan decomposition of the nilpotent operator, degree aware on the graded
// backend (the change of basis is homogeneous of degree 0).
ModuleDecomposition decompose_module(const LambdaModule& m);

// Columns span the socle {x : Tx = 0} / the radical TM.
PrimeMatrix socle_basis(const LambdaModule& m);
PrimeMatrix radical_basis(const LambdaModule& m);
std::size_t top_dim(const LambdaModule& m);

// Projective = injective = free on both backends (all Jordan blocks of
// maximal length n).
bool is_projective_module(const LambdaModule& m);

// Degree shift M(l): adds l to every degree.  Graded backend only.
LambdaModule shifted_module(const LambdaModule& m, int l);

} // namespace arcalc
