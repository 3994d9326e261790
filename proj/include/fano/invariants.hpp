#ifndef FANO_INVARIANTS_HPP
#define FANO_INVARIANTS_HPP

#include "fano/models.hpp"

namespace fano {

// The hyperdeterminant-style invariant of a quadric monad datum A: the
// determinant of S^2(phi_A) restricted to Lambda^2 W* (x) <omega>, a square
// matrix of order C(k, 2).  Its vanishing detects failure of fiberwise
// surjectivity; only zero / nonzero is contractual (the scale depends on
// basis choices).
Fp dd_invariant(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin);

// The matrix itself, for inspection.
FMat dd_matrix(const PrimeField& K, const Tensor3& a, const SpinSplit& spin);

// ---------------------------------------------------------------------------
// Wall's semistability criterion for nets by full subspace enumeration over
// a tiny field: alpha is unstable iff subspaces I1, I2 of I* exist with
// dim I1 + dim I2 > k and every net member vanishing on I1 x I2.
// ---------------------------------------------------------------------------

struct SemistabilityWitness {
    bool semistable = true;
    // for unstable nets: bases of the annihilating pair (rows span the subspace)
    FMat i1, i2;
};

// The net must live over F_q, q in {2, 3}; k <= 4 for q = 2, k <= 3 for q = 3.
SemistabilityWitness wall_semistable(const Net& n);

// Re-verifies a witness independently: the induced map B -> I1 (x) I2 must be
// the zero matrix.
bool verify_unstable_witness(const PrimeField& K, const Net& n, const SemistabilityWitness& w);

// ---------------------------------------------------------------------------
// The apolar quartic of a V22 model: det of the net of Gram matrices, a
// plane quartic in the 3 net coordinates.  Throws on a degenerate model
// (identically zero determinant).
// ---------------------------------------------------------------------------

FPoly apolar_quartic(const V22Model& model, Rng& rng);

} // namespace fano

#endif
