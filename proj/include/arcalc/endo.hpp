#pragma once

#include "arcalc/hobjects.hpp"

namespace arcalc {

// Endomorphism ring of a submodule object, given by a basis with structure
// constants in the left regular representation.  Elements are coefficient
// columns over the basis.  The radical comes from the kernel of the trace
// form, which is valid only in large characteristic; construction refuses
// fields with p <= 2 * dim End.
struct EndoRing {
    std::vector<HMorphism> basis;
    std::vector<PrimeMatrix> left_mult; // left_mult[i] * coeff(b) = coeff(e_i b)
    PrimeMatrix one;                    // coefficients of the identity
    PrimeMatrix radical;                // columns: coefficient vectors spanning rad
    Field field;

    std::size_t dim() const { return basis.size(); }
};

EndoRing endo_ring(const SObject& x);

// Coefficient vector of the product a b.
PrimeMatrix endo_mult(const EndoRing& e, const PrimeMatrix& a, const PrimeMatrix& b);

// Whether the ring is local, equivalently whether the object with this
// endomorphism ring is indecomposable.  Deterministic: checks the quotient
// by the radical for being a field via commutativity and the fixed space of
// the Frobenius map.
bool is_local_ring(const EndoRing& e);

// Linear combination of morphisms between fixed objects.
HMorphism combine_morphisms(const HObject& x, const HObject& y,
                            const std::vector<HMorphism>& basis, const PrimeMatrix& coeff);

} // namespace arcalc
