#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano/invariants.hpp"
#include "fano/monads.hpp"

using namespace fano;

TEST_CASE("dd: k=2 matches the direct 1x1 oracle") {
    PrimeField K(32003);
    SpinSplit spin = build_spin_split(K);
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        Tensor3 a = Tensor3::zero(K, 1, 2, 4);
        for (int w = 0; w < 2; ++w)
            for (int u = 0; u < 4; ++u) a.at(0, w, u) = K.random(rng);
        // direct evaluation: omega-pairing of the two W-rows of the single slice
        FMat r0(4, 1), r1(4, 1);
        for (int u = 0; u < 4; ++u) {
            r0(u, 0) = a.at(0, 0, u);
            r1(u, 0) = a.at(0, 1, u);
        }
        Fp oracle = spin.pair(r0, r1);
        Duality d = make_duality(K, eye(K, 2), Parity::Symmetric);
        CHECK(dd_invariant(K, a, d, spin) == oracle);
    }
    // proportional rows force zero
    Tensor3 a = Tensor3::zero(K, 1, 2, 4);
    for (int u = 0; u < 4; ++u) {
        a.at(0, 0, u) = K((long long)(u + 1));
        a.at(0, 1, u) = K((long long)(3 * (u + 1)));
    }
    Duality d = make_duality(K, eye(K, 2), Parity::Symmetric);
    CHECK(dd_invariant(K, a, d, spin).is_zero());
}

TEST_CASE("dd: nonzero on sampled monads, zero on point-degenerate ones") {
    PrimeField K(32003);
    SpinSplit spin = build_spin_split(K);
    Rng rng(8);
    for (int k = 2; k <= 6; ++k) {
        MonadData m = sample_quadric_monad(k, K, spin, rng);
        CHECK(!dd_invariant(K, m.a, m.d, spin).is_zero());
        auto [dm, pt] = sample_degenerate_quadric_monad(k, K, spin, rng);
        CHECK(dd_invariant(K, dm.a, dm.d, spin).is_zero());
    }
}

TEST_CASE("dd nonvanishing is a group invariant") {
    PrimeField K(32003);
    SpinSplit spin = build_spin_split(K);
    Rng rng(15);
    MonadData m = sample_quadric_monad(4, K, spin, rng);
    for (int t = 0; t < 50; ++t) {
        FMat xi = random_invertible(K, m.a.dim_i, rng);
        FMat eta = random_group_eta(K, m.d, rng);
        MonadData m2 = group_act(K, m, xi, eta);
        CHECK(!dd_invariant(K, m2.a, m2.d, spin).is_zero());
    }
    auto [dm, pt] = sample_degenerate_quadric_monad(4, K, spin, rng);
    for (int t = 0; t < 10; ++t) {
        FMat xi = random_invertible(K, dm.a.dim_i, rng);
        FMat eta = random_group_eta(K, dm.d, rng);
        MonadData m2 = group_act(K, dm, xi, eta);
        CHECK(dd_invariant(K, m2.a, m2.d, spin).is_zero());
    }
}

TEST_CASE("wall: k=1 cases and the zero net") {
    PrimeField K(3);
    Rng rng(2);
    V22Model model = build_v22_model(K, rng);

    Net z = Net::zero(K, Geometry::V22, 1);
    z.b_gram = model.bstar_gram;
    SemistabilityWitness wz = wall_semistable(z);
    CHECK(!wz.semistable);
    CHECK(wz.i1.rows() == 1);
    CHECK(wz.i2.rows() == 1);
    CHECK(verify_unstable_witness(K, z, wz));

    Net n = sample_v22_net(1, model, rng);
    CHECK(wall_semistable(n).semistable);
}

TEST_CASE("wall: sampled rank-certified k=2 nets over F_3 are semistable") {
    PrimeField K(3);
    Rng rng(21);
    // model-level retry: over F_3 a model's rank-7 stratum can be empty
    for (int t = 0; t < 3; ++t) {
        auto [model, n] = sample_v22_model_net(2, K, rng);
        REQUIRE(rank(n.ambient(K)) == 7);
        CHECK(wall_semistable(n).semistable);
    }
}

TEST_CASE("wall: split nets are unstable with verifiable witnesses") {
    PrimeField K(3);
    Rng rng(5);
    // net supported on e_0 . e_0 only: I1 = <e_1>, I2 = everything kills it
    Net split = Net::zero(K, Geometry::V22, 2);
    split.b_gram.assign(3, zeros(K, 4, 4));
    for (int b = 0; b < 3; ++b) split.set_coeff(0, 0, b, K((long long)(b + 1)));
    SemistabilityWitness w = wall_semistable(split);
    REQUIRE(!w.semistable);
    CHECK(w.i1.rows() + w.i2.rows() > 2);
    CHECK(verify_unstable_witness(K, split, w));

    // over F_2 as well (enumeration field only; no Gram halving involved)
    PrimeField K2(2);
    Net split2 = Net::zero(K2, Geometry::V22, 4);
    split2.b_gram.assign(3, zeros(K2, 4, 4));
    for (int b = 0; b < 3; ++b) {
        split2.set_coeff(0, 0, b, K2.one());
        split2.set_coeff(0, 1, b, K2((long long)b % 2));
    }
    SemistabilityWitness w2 = wall_semistable(split2);
    REQUIRE(!w2.semistable);
    CHECK(verify_unstable_witness(K2, split2, w2));

    // out-of-range enumeration is rejected
    Net big = Net::zero(K, Geometry::V22, 4);
    big.b_gram.assign(3, zeros(K, 4, 4));
    CHECK_THROWS_AS(wall_semistable(big), std::invalid_argument);
}

TEST_CASE("apolar quartic: diagonal case splits into linear factors") {
    PrimeField K(32003);
    Rng rng(1);
    V22Model model = build_v22_model(K, rng);
    // replace the net by the diagonal test net
    V22Model diag = model;
    FMat q1 = zeros(K, 4, 4), q2 = zeros(K, 4, 4), q3 = zeros(K, 4, 4);
    long d2[] = {0, 1, 2, 3}, d3[] = {0, 0, 1, 5};
    for (int i = 0; i < 4; ++i) {
        q1(i, i) = K.one();
        q2(i, i) = K(d2[i]);
        q3(i, i) = K(d3[i]);
    }
    diag.bstar_gram = {q1, q2, q3};
    FPoly quartic = apolar_quartic(diag, rng);
    CHECK(quartic.total_degree() == 4);
    // product of the four linear forms (x1 + d_i x2 + e_i x3)
    FPoly expect = FPoly::constant(3, K.one());
    for (int i = 0; i < 4; ++i) {
        FPoly lin(3);
        lin = lin + FPoly::variable(3, 0, K.one());
        lin = lin + K(d2[i]) * FPoly::variable(3, 1, K.one());
        lin = lin + K(d3[i]) * FPoly::variable(3, 2, K.one());
        expect = expect * lin;
    }
    CHECK(quartic == expect);
}

TEST_CASE("apolar quartic detects rank drops of net members") {
    PrimeField K(32003);
    Rng rng(6);
    V22Model model = build_v22_model(K, rng);
    FPoly quartic = apolar_quartic(model, rng);
    CHECK(quartic.total_degree() == 4);
    for (int t = 0; t < 100; ++t) {
        std::vector<Fp> c{K.random(rng), K.random(rng), K.random(rng)};
        FMat gram = zeros(K, 4, 4);
        for (int b = 0; b < 3; ++b) gram = gram + c[b] * model.bstar_gram[b];
        bool full_rank = (rank(gram) == 4);
        bool quartic_nonzero = !quartic.eval(c, K.one()).is_zero();
        CHECK(full_rank == quartic_nonzero);
    }
}

TEST_CASE("apolar quartic evaluates to the exact determinant of net members") {
    PrimeField K(32003);
    Rng rng(31);
    V22Model model = build_v22_model(K, rng);
    FPoly quartic = apolar_quartic(model, rng);
    for (int t = 0; t < 20; ++t) {
        std::vector<Fp> c{K.random(rng), K.random(rng), K.random(rng)};
        FMat gram = zeros(K, 4, 4);
        for (int b = 0; b < 3; ++b) gram = gram + c[b] * model.bstar_gram[b];
        CHECK(quartic.eval(c, K.one()) == det(K, gram));
    }
}
