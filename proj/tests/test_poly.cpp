#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano/fpoly.hpp"

using namespace fano;

namespace {

FPoly var(const PrimeField& K, int nvars, int i) { return FPoly::variable(nvars, i, K.one()); }

} // namespace

TEST_CASE("multipoly arithmetic and canonical order") {
    PrimeField K(32003);
    FPoly x = var(K, 2, 0), y = var(K, 2, 1);
    FPoly p = x * x - y * y;
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.coeff({2, 0}) == K.one());
    CHECK(p.coeff({0, 2}) == -K.one());
    CHECK((p + (y * y - x * x)).is_zero());

    FPoly q = (x - y) * (x + y);
    CHECK(p == q); // canonical form makes equal polynomials structurally equal

    // no zero terms survive cancellation
    FPoly r = x * y - x * y;
    CHECK(r.term_count() == 0);

    // eval
    CHECK(p.eval({K(5), K(3)}, K.one()) == K(16));
}

TEST_CASE("poly_det: diagonal and symmetric 2x2") {
    PrimeField K(32003);
    Rng rng(1);
    FPoly x = var(K, 2, 0), y = var(K, 2, 1);

    PolyMat d(2, 2, FPoly(2));
    d(0, 0) = x;
    d(1, 1) = y;
    CHECK(poly_det(K, d, rng) == x * y);

    PolyMat s(2, 2, FPoly(2));
    s(0, 0) = x;
    s(0, 1) = y;
    s(1, 0) = y;
    s(1, 1) = x;
    CHECK(poly_det(K, s, rng) == x * x - y * y);
}

TEST_CASE("poly_det commutes with scalar evaluation (4x4 linear entries)") {
    PrimeField K(32003);
    Rng rng(77);
    int nvars = 3;
    PolyMat m(4, 4, FPoly(nvars));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            FPoly e(nvars);
            for (int v = 0; v < nvars; ++v) e = e + K.random(rng) * var(K, nvars, v);
            m(i, j) = e;
        }
    FPoly dp = poly_det(K, m, rng);
    CHECK(dp.is_homogeneous());
    CHECK(dp.total_degree() == 4);
    for (int t = 0; t < 20; ++t) {
        std::vector<Fp> pt;
        for (int v = 0; v < nvars; ++v) pt.push_back(K.random(rng));
        FMat ev = zeros(K, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) ev(i, j) = m(i, j).eval(pt, K.one());
        CHECK(dp.eval(pt, K.one()) == det(K, ev));
    }
}

TEST_CASE("poly_det: interpolation path for n > 6 agrees with evaluation") {
    PrimeField K(32003);
    Rng rng(5);
    int n = 7, nvars = 2;
    PolyMat m(n, n, FPoly(nvars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = K.random(rng) * var(K, nvars, 0) + K.random(rng) * var(K, nvars, 1);
    FPoly dp = poly_det(K, m, rng);
    CHECK(dp.total_degree() == n);
    for (int t = 0; t < 10; ++t) {
        std::vector<Fp> pt{K.random(rng), K.random(rng)};
        FMat ev = zeros(K, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ev(i, j) = m(i, j).eval(pt, K.one());
        CHECK(dp.eval(pt, K.one()) == det(K, ev));
    }
}

TEST_CASE("poly_det over the rationals") {
    RationalField Q;
    MPoly<Rat> x = MPoly<Rat>::variable(2, 0, Q.one());
    MPoly<Rat> y = MPoly<Rat>::variable(2, 1, Q.one());
    Mat<MPoly<Rat>> m(2, 2, MPoly<Rat>(2));
    m(0, 0) = x;
    m(0, 1) = y;
    m(1, 0) = y;
    m(1, 1) = x;
    CHECK(poly_det(m) == x * x - y * y);
}

TEST_CASE("univariate helpers") {
    PrimeField K(101);
    // f = (x-3)(x-5)^2
    UPoly f;
    f.c = {K(-75), K(55), K(-13), K(1)};
    UPoly fp = upoly_derivative(K, f);
    UPoly g = upoly_gcd(K, f, fp);
    CHECK(g.degree() == 1); // the double root survives in the gcd
    CHECK(g.eval(K(5), K).is_zero());

    auto roots = upoly_roots(K, f);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == K(3) && roots[1] == K(5)) || (roots[0] == K(5) && roots[1] == K(3))));

    // interpolation round-trip
    std::vector<Fp> xs{K(0), K(1), K(2), K(3)}, ys;
    for (const Fp& x : xs) ys.push_back(f.eval(x, K));
    UPoly h = upoly_interpolate(K, xs, ys);
    CHECK(h.c == f.c);
}
