#ifndef FANO_HILBERT_HPP
#define FANO_HILBERT_HPP

#include <vector>

#include "fano/geometry.hpp"
#include "fano/rat.hpp"

namespace fano {

// Dense univariate polynomial in t over the rationals, ascending coefficients.
struct QPoly {
    std::vector<Rat> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Rat coeff(int i) const { return i < (int)c.size() ? c[i] : Rat(); }
    Rat leading() const { return c.empty() ? Rat() : c.back(); }

    Rat eval(const Rat& t) const {
        Rat acc;
        for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc * t + c[i];
        return acc;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rat& s, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // substitute t -> t + shift
    QPoly shifted(long shift) const;
};

QPoly qpoly_t(); // the polynomial t

// binomial coefficient C(t + a, d) as a polynomial in t
QPoly binom_poly(long a, int d);

// Lagrange interpolation through rational points with distinct abscissae.
QPoly qpoly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Hilbert polynomials have degree <= 3 here.
using HilbPoly = QPoly;

enum class BundleTag { StructureSheaf, Spinor, UniversalSub, UniversalSubDual };

// chi(O(t)), chi(S(t)) (quadric), chi(U(t)), chi(U*(t)) (V5) as polynomials.
QPoly chi_bundle_poly(Geometry g, BundleTag tag);

// Euler characteristic value at an integer twist.
Rat chi_bundle(Geometry g, BundleTag tag, long t);

// The displayed instanton Hilbert polynomials.  For the quadric and V5 the
// argument is c2 = k; for V22 it is c2 (= net parameter + 7).
HilbPoly chi_instanton(Geometry g, long c2);

// Euler characteristic of the monad's middle-minus-ends, as a polynomial;
// equals chi_instanton identically.  V22 is unsupported (the needed Chern
// data of its bundles is not pinned down here).
HilbPoly chi_monad(Geometry g, int k);

} // namespace fano

#endif
