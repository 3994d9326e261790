#include "fano/hilbert.hpp"

#include <stdexcept>

#include "fano/mat.hpp"

namespace fano {

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

QPoly operator*(const Rat& s, const QPoly& a) {
    QPoly r = a;
    for (Rat& x : r.c) x *= s;
    r.trim();
    return r;
}

QPoly QPoly::shifted(long shift) const {
    QPoly x;
    x.c = {Rat(shift), Rat(1)}; // t + shift
    QPoly acc;
    QPoly pow;
    pow.c = {Rat(1)};
    for (size_t i = 0; i < c.size(); ++i) {
        acc = acc + c[i] * pow;
        pow = pow * x;
    }
    return acc;
}

QPoly qpoly_t() {
    QPoly p;
    p.c = {Rat(0), Rat(1)};
    return p;
}

QPoly binom_poly(long a, int d) {
    QPoly r;
    r.c = {Rat(1)};
    long fact = 1;
    for (int i = 0; i < d; ++i) {
        QPoly lin;
        lin.c = {Rat(a - i), Rat(1)}; // t + a - i
        r = r * lin;
        fact *= (i + 1);
    }
    return Rat(1, fact) * r;
}

QPoly qpoly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("qpoly_interpolate: size mismatch");
    QPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly li;
        li.c = {Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            QPoly lin;
            lin.c = {-xs[j], Rat(1)};
            li = li * lin;
            denom *= (xs[i] - xs[j]);
        }
        acc = acc + (ys[i] / denom) * li;
    }
    return acc;
}

namespace {

// chi(O_Q(t)) for the quadric threefold in P^4
QPoly chi_o_quadric() { return binom_poly(4, 4) - binom_poly(2, 4); }

// chi(S(t)) from the universal sequence recurrence
// chi(S(t)) + chi(S(t+1)) = 4 chi(O_Q(t)), anchored by chi(S(-1)) = 0.
QPoly chi_spinor() {
    QPoly o = chi_o_quadric();
    std::vector<Rat> xs, ys;
    Rat cur(0); // chi(S(-1))
    long t = -1;
    for (int i = 0; i < 4; ++i) {
        xs.push_back(Rat(t));
        ys.push_back(cur);
        cur = Rat(4) * o.eval(Rat(t)) - cur; // chi(S(t+1))
        ++t;
    }
    return qpoly_interpolate(xs, ys);
}

// chi(O_X(t)) for V5: cubic with leading coefficient deg/6 = 5/6, pinned by
// chi(O) = 1, chi(O(-1)) = 0 and Serre duality chi(O(-2)) = -chi(O).
QPoly chi_o_v5() {
    Rat c3(5, 6);
    // unknowns c2, c1, c0
    Mat<Rat> m(3, 3, Rat());
    Mat<Rat> rhs(3, 1, Rat());
    auto row = [&](int r, long t, const Rat& value) {
        m(r, 0) = Rat(t) * Rat(t);
        m(r, 1) = Rat(t);
        m(r, 2) = Rat(1);
        rhs(r, 0) = value - c3 * Rat(t) * Rat(t) * Rat(t);
    };
    row(0, 0, Rat(1));
    row(1, -1, Rat(0));
    row(2, -2, Rat(-1));
    auto sol = solve(m, rhs, Rat());
    if (!sol) throw std::logic_error("chi_o_v5: interpolation system is singular");
    QPoly r;
    r.c = {(*sol)(2, 0), (*sol)(1, 0), (*sol)(0, 0), c3};
    return r;
}

// chi(U(t)) for V5: leading coefficient 2 * 5/6, the functional equation
// chi(U(t)) = -chi(U(-1-t)) from U = U*(-1) and Serre duality, anchored by
// chi(U*) = dim U = 5.
QPoly chi_u_v5() {
    Rat c3(10, 6);
    // functional equation coefficients: 2 c2 = 3 c3 and 2 c0 = c3 - c2 + c1
    Rat c2 = Rat(3, 2) * c3;
    // remaining unknowns c1, c0: 2 c0 - c1 = c3 - c2 and chi(1) = 5
    Mat<Rat> m(2, 2, Rat());
    Mat<Rat> rhs(2, 1, Rat());
    m(0, 0) = Rat(-1);
    m(0, 1) = Rat(2);
    rhs(0, 0) = c3 - c2;
    m(1, 0) = Rat(1);
    m(1, 1) = Rat(1);
    rhs(1, 0) = Rat(5) - c3 - c2;
    auto sol = solve(m, rhs, Rat());
    if (!sol) throw std::logic_error("chi_u_v5: anchoring system is singular");
    QPoly r;
    r.c = {(*sol)(1, 0), (*sol)(0, 0), c2, c3};
    return r;
}

} // namespace

QPoly chi_bundle_poly(Geometry g, BundleTag tag) {
    switch (g) {
        case Geometry::Quadric:
            if (tag == BundleTag::StructureSheaf) return chi_o_quadric();
            if (tag == BundleTag::Spinor) return chi_spinor();
            throw std::invalid_argument("chi_bundle_poly: quadric supports O(t) and the spinor bundle");
        case Geometry::V5:
            if (tag == BundleTag::StructureSheaf) return chi_o_v5();
            if (tag == BundleTag::UniversalSub) return chi_u_v5();
            if (tag == BundleTag::UniversalSubDual) return chi_u_v5().shifted(1); // U* = U(1)
            throw std::invalid_argument("chi_bundle_poly: v5 supports O(t), U and U*");
        case Geometry::V22:
            throw std::invalid_argument("chi_bundle_poly: V22 bundle Euler characteristics are not supported");
    }
    throw std::logic_error("chi_bundle_poly: bad geometry");
}

Rat chi_bundle(Geometry g, BundleTag tag, long t) { return chi_bundle_poly(g, tag).eval(Rat(t)); }

HilbPoly chi_instanton(Geometry g, long c2) {
    QPoly t = qpoly_t();
    QPoly t1 = t.shifted(1); // t + 1 as a polynomial
    switch (g) {
        case Geometry::Quadric: {
            // (t+1)/3 (2t^2 + 4t - 3k + 3)
            QPoly inner;
            inner.c = {Rat(-3 * c2 + 3), Rat(4), Rat(2)};
            return Rat(1, 3) * (t1 * inner);
        }
        case Geometry::V5: {
            // (t+1)/3 (5t^2 + 10t - 3k + 6)
            QPoly inner;
            inner.c = {Rat(-3 * c2 + 6), Rat(10), Rat(5)};
            return Rat(1, 3) * (t1 * inner);
        }
        case Geometry::V22: {
            // t/3 ((2g-2) t^2 - 3 c2 + g + 11), g = 12
            QPoly inner;
            inner.c = {Rat(-3 * c2 + 23), Rat(0), Rat(22)};
            return Rat(1, 3) * (t * inner);
        }
    }
    throw std::logic_error("chi_instanton: bad geometry");
}

HilbPoly chi_monad(Geometry g, int k) {
    MonadDims dims = monad_dims(g, k);
    switch (g) {
        case Geometry::Quadric: {
            // I* (x) O(-1) -> W* (x) S -> I (x) O
            QPoly o = chi_o_quadric();
            QPoly s = chi_spinor();
            return Rat(dims.dim_w) * s - Rat(dims.dim_i) * (o + o.shifted(-1));
        }
        case Geometry::V5: {
            // I* (x) U -> W* (x) O -> I (x) U*
            QPoly o = chi_o_v5();
            QPoly u = chi_u_v5();
            return Rat(dims.dim_w) * o - Rat(dims.dim_i) * (u + u.shifted(1));
        }
        case Geometry::V22:
            throw std::invalid_argument("chi_monad: the V22 cross-check is not supported");
    }
    throw std::logic_error("chi_monad: bad geometry");
}

} // namespace fano
