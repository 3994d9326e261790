#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano/tensor.hpp"

using namespace fano;

TEST_CASE("spin split: dimensions, projections, quadratic form") {
    PrimeField K(32003);
    SpinSplit s = build_spin_split(K);

    CHECK(s.v_basis.cols() == 5);
    CHECK((s.p_v * s.omega_coords).is_zero());
    CHECK(s.p_v + s.p_omega == eye(K, 6));
    CHECK(s.p_v * s.p_v == s.p_v);
    CHECK((s.coord_v * s.omega_coords).is_zero());

    // v in V iff v ^ omega = 0
    for (int c = 0; c < 5; ++c) CHECK(wedge_top_coeff(s.v_basis.col(c), s.omega_coords).is_zero());

    // q(v) = coefficient of v ^ v restricted to V is nondegenerate: rank-5 Gram
    FMat gram(5, 5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) gram(a, b) = wedge_top_coeff(s.v_basis.col(a), s.v_basis.col(b)) + wedge_top_coeff(s.v_basis.col(b), s.v_basis.col(a));
    CHECK(rank(gram) == 5);
}

TEST_CASE("ambient: zero net, k=1 collapse, blockwise reconstruction") {
    PrimeField K(32003);
    Rng rng(3);

    // V22, k = 1: the ambient matrix of a single net element is its Gram matrix
    Net n1 = Net::zero(K, Geometry::V22, 1);
    for (int b = 0; b < 3; ++b) n1.b_gram[b] = random_symmetric(K, 4, rng);
    CHECK(n1.ambient(K).is_zero());
    n1.set_coeff(0, 0, 0, K.one());
    CHECK(n1.ambient(K) == n1.b_gram[0]);

    // V5, k = 2: ambient is 10x10, exactly skew, with the documented blocks
    Net n2 = Net::zero(K, Geometry::V5, 2);
    for (int b = 0; b < 3; ++b) n2.b_gram[b] = random_skew(K, 5, rng);
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j)
            for (int b = 0; b < 3; ++b) n2.set_coeff(i, j, b, K.random(rng));
    FMat amb = n2.ambient(K);
    CHECK(amb.rows() == 10);
    CHECK(amb.transpose() == (-K.one()) * amb);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            FMat block = zeros(K, 5, 5);
            for (int b = 0; b < 3; ++b) block = block + n2.coeff(i, j, b) * n2.b_gram[b];
            for (int u = 0; u < 5; ++u)
                for (int u2 = 0; u2 < 5; ++u2) CHECK(amb(5 * i + u, 5 * j + u2) == block(u, u2));
        }

    // V22 ambient is exactly symmetric
    Net n3 = Net::zero(K, Geometry::V22, 2);
    for (int b = 0; b < 3; ++b) n3.b_gram[b] = random_symmetric(K, 4, rng);
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j)
            for (int b = 0; b < 3; ++b) n3.set_coeff(i, j, b, K.random(rng));
    FMat amb3 = n3.ambient(K);
    CHECK(amb3.transpose() == amb3);
}

TEST_CASE("ambient is injective in the net coefficients") {
    PrimeField K(32003);
    Rng rng(9);
    for (Geometry g : {Geometry::V5, Geometry::V22}) {
        int du = (g == Geometry::V5) ? 5 : 4;
        for (int k = 1; k <= 3; ++k) {
            if (g == Geometry::V5 && k < 2) continue;
            std::vector<FMat> grams;
            for (int b = 0; b < 3; ++b)
                grams.push_back(g == Geometry::V5 ? random_skew(K, 5, rng) : random_symmetric(K, 4, rng));
            int ncoef = 3 * k * (k + 1) / 2;
            FMat map(k * du * k * du, ncoef);
            int col = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j)
                    for (int b = 0; b < 3; ++b, ++col) {
                        Net unit = Net::zero(K, g, k);
                        unit.b_gram = grams;
                        unit.set_coeff(i, j, b, K.one());
                        FMat amb = unit.ambient(K);
                        for (int r = 0; r < amb.rows(); ++r)
                            for (int c = 0; c < amb.cols(); ++c) map(r * amb.cols() + c, col) = amb(r, c);
                    }
            CHECK(rank(map) == ncoef);
        }
    }
}

TEST_CASE("project_condition: shapes and diagonal vanishing") {
    PrimeField K(32003);
    SpinSplit spin = build_spin_split(K);
    Rng rng(17);

    // k = 2: dimI = 1, no pairs, empty condition list
    Tensor3 a2 = Tensor3::zero(K, 1, 2, 4);
    for (int w = 0; w < 2; ++w)
        for (int u = 0; u < 4; ++u) a2.at(0, w, u) = K.random(rng);
    Duality d2 = make_duality(K, eye(K, 2), Parity::Symmetric);
    CHECK(project_condition(K, a2, d2, spin).empty());

    // k = 4: 5 C(3,2) = 15 values; the diagonal pairs vanish identically for
    // a symmetric duality
    Tensor3 a4 = Tensor3::zero(K, 3, 4, 4);
    for (int i = 0; i < 3; ++i)
        for (int w = 0; w < 4; ++w)
            for (int u = 0; u < 4; ++u) a4.at(i, w, u) = K.random(rng);
    FMat dm = random_symmetric(K, 4, rng);
    while (det(K, dm).is_zero()) dm = random_symmetric(K, 4, rng);
    Duality d4 = make_duality(K, dm, Parity::Symmetric);
    CHECK(project_condition(K, a4, d4, spin).size() == 15);
    for (int i = 0; i < 3; ++i) CHECK(pair_condition(K, a4, d4, spin, i, i).is_zero());
}

TEST_CASE("duality validation") {
    PrimeField K(101);
    Rng rng(2);
    CHECK_THROWS_AS(make_duality(K, zeros(K, 3, 3), Parity::Symmetric), std::invalid_argument);
    CHECK_THROWS_AS(make_duality(K, eye(K, 3), Parity::Skew), std::invalid_argument);
    FMat sk = random_skew(K, 4, rng);
    while (det(K, sk).is_zero()) sk = random_skew(K, 4, rng);
    CHECK(make_duality(K, sk, Parity::Skew).parity == Parity::Skew);
}
