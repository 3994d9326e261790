#ifndef FANO_FPOLY_HPP
#define FANO_FPOLY_HPP

#include <vector>

#include "fano/linalg.hpp"
#include "fano/poly.hpp"

namespace fano {

using FPoly = MPoly<Fp>;
using PolyMat = Mat<FPoly>;

// Exact determinant of a matrix of polynomials. Direct expansion up to 6x6;
// beyond that, evaluation-interpolation over F_p when every entry is
// homogeneous of one common degree (the case that actually occurs: matrices
// of linear forms), expansion otherwise.
FPoly poly_det(const PrimeField& K, const PolyMat& m, Rng& rng);

// Determinant over the rationals; always by expansion (sizes stay small in
// rational mode).
MPoly<Rat> poly_det(const Mat<MPoly<Rat>>& m);

// ---- dense univariate polynomials over F_p (ascending coefficients) ----

struct UPoly {
    std::vector<Fp> c; // c[i] multiplies x^i; no trailing zeros

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }

    Fp eval(const Fp& x, const PrimeField& K) const {
        Fp acc = K.zero();
        for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }
};

UPoly upoly_derivative(const PrimeField& K, const UPoly& f);
UPoly upoly_gcd(const PrimeField& K, UPoly a, UPoly b); // monic gcd

// All distinct roots of f in F_p, sorted by value.  Full scan over tiny
// fields; gcd with x^p - x plus equal-degree splitting otherwise, so large
// primes are fine.
std::vector<Fp> upoly_roots(const PrimeField& K, const UPoly& f);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
UPoly upoly_interpolate(const PrimeField& K, const std::vector<Fp>& xs, const std::vector<Fp>& ys);

} // namespace fano

#endif
