#ifndef FANO_MODELS_HPP
#define FANO_MODELS_HPP

#include <cstdint>
#include <vector>

#include "fano/fpoly.hpp"
#include "fano/tensor.hpp"

namespace fano {

// ---------------------------------------------------------------------------
// Quadric threefold: points are omega-isotropic 2-planes P in the 4-space U.
// ---------------------------------------------------------------------------

struct QuadricModel {
    PrimeField K;
    SpinSplit spin;
};

inline QuadricModel build_quadric_model(const PrimeField& K) { return {K, build_spin_split(K)}; }

struct QuadricPoint {
    FMat p1, p2; // 4x1 columns spanning P, omega(p1, p2) = 0
};

QuadricPoint sample_point_quadric(const QuadricModel& model, Rng& rng);

// Fiber of the evaluation U -> P*: 2x4 matrix sending u to (omega(u,p1), omega(u,p2)).
FMat quadric_fiber(const SpinSplit& spin, const QuadricPoint& pt);

// ---------------------------------------------------------------------------
// V5: the degree-5 Del Pezzo threefold, cut out of G(2, U*) (dim U = 5) by a
// 3-dimensional B inside Lambda^2 U.  Points are 2-planes Lambda in U* on
// which every form of B vanishes.
// ---------------------------------------------------------------------------

struct V5Model {
    PrimeField K;
    std::vector<FMat> b_gram; // 3 skew 5x5 Grams spanning B
};

V5Model build_v5_model(const PrimeField& K, Rng& rng);

struct V5Point {
    FMat l1, l2; // 5x1 columns spanning Lambda in U*
};

V5Point sample_point_v5(const V5Model& model, Rng& rng);

// Fiber of the evaluation U -> Lambda*: 2x5 matrix sending u to (l1(u), l2(u)).
FMat v5_fiber(const V5Point& pt);

// ---------------------------------------------------------------------------
// V22: the genus-12 prime Fano threefold, modeled through twisted cubics in
// projective 3-space that annihilate a net of quadrics B* in S^2 U
// (dim U = 4).  A point is a coordinate change g applied to the standard
// rational normal curve together with its quadric ideal and the syzygy data.
// ---------------------------------------------------------------------------

struct CubicPoint {
    FMat g;                  // 4x4 invertible
    std::vector<FMat> ideal; // 3 symmetric 4x4 Grams spanning the degree-2 part of the ideal
    std::vector<FMat> psi;   // psi[u] (u = 0..3): 3x2 syzygy matrix evaluated at e_u
};

struct V22Model {
    PrimeField K;
    std::vector<FMat> bstar_gram; // 3 symmetric 4x4 Grams spanning B* in S^2 U
    std::vector<FMat> v_ann;      // 7 Grams spanning V = annihilator of B* in S^2 U*
    std::vector<CubicPoint> seeded;
    std::uint64_t seed = 0;
};

V22Model build_v22_model(const PrimeField& K, Rng& rng);

// Quadric ideal of g . (standard twisted cubic), as the kernel of evaluation
// at >= 7 parameter points.  Needs p >= 11 for enough distinct points.
std::vector<FMat> cubic_ideal_by_evaluation(const PrimeField& K, const FMat& g);

// The same ideal by transforming the standard one: Q |-> g^{-t} Q g^{-1}.
// Valid in any characteristic; used when the field is too small to evaluate.
std::vector<FMat> cubic_ideal_by_transform(const PrimeField& K, const FMat& g);

// xz - y^2, yw - z^2, xw - yz as Gram matrices.
std::vector<FMat> standard_cubic_ideal(const PrimeField& K);

// Syzygies of the three ideal quadrics: psi[u] is the 3x2 matrix of the
// linear syzygy matrix evaluated at basis vector e_u.  Throws when the
// syzygy space is not 2-dimensional.
std::vector<FMat> syzygy_psi(const PrimeField& K, const std::vector<FMat>& ideal);

CubicPoint make_cubic_point(const PrimeField& K, const FMat& g);

// trace pairing between quadratic form spaces
Fp gram_pairing(const FMat& a, const FMat& b);

// quadratic form as polynomial, and the Gram coordinate layout (u <= u')
FPoly gram_to_poly(const PrimeField& K, const FMat& q);
FMat gram_coords(const PrimeField& K, const FMat& q);        // 10x1
FMat gram_from_coords(const PrimeField& K, const FMat& v);   // 4x4 symmetric

// Best-effort search for more cubics annihilating B*, by testing random
// coordinate changes.  The hit probability is ~ p^-9 per candidate, so over
// a large field this all but surely returns nothing; reported as such.
std::vector<CubicPoint> extra_point_search(const V22Model& model, int candidates, Rng& rng);

} // namespace fano

#endif
