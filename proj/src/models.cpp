#include "fano/models.hpp"

#include <stdexcept>

namespace fano {

QuadricPoint sample_point_quadric(const QuadricModel& model, Rng& rng) {
    const PrimeField& K = model.K;
    for (int tries = 0; tries < 200; ++tries) {
        FMat p1 = random_mat(K, 4, 1, rng);
        if (p1.is_zero()) continue;
        // omega(p1, .) = 0 is one linear condition; its kernel is 3-dimensional
        FMat cond(1, 4);
        for (int u = 0; u < 4; ++u) cond(0, u) = (p1.transpose() * model.spin.omega_gram.col(u))(0, 0);
        FMat ker = kernel_basis(cond);
        FMat p2 = ker * random_mat(K, ker.cols(), 1, rng);
        FMat span = hstack(p1, p2);
        if (rank(span) != 2) continue;
        return {p1, p2};
    }
    throw std::runtime_error("sample_point_quadric: exhausted retries");
}

FMat quadric_fiber(const SpinSplit& spin, const QuadricPoint& pt) {
    FMat e(2, 4);
    for (int u = 0; u < 4; ++u) {
        FMat eu = zeros(spin.K, 4, 1);
        eu(u, 0) = spin.K.one();
        e(0, u) = spin.pair(eu, pt.p1);
        e(1, u) = spin.pair(eu, pt.p2);
    }
    return e;
}

V5Model build_v5_model(const PrimeField& K, Rng& rng) {
    for (int tries = 0; tries < 100; ++tries) {
        V5Model m{K, {}};
        for (int b = 0; b < 3; ++b) m.b_gram.push_back(random_skew(K, 5, rng));
        // B must be 3-dimensional as a subspace of Lambda^2 U
        FMat coords(3, 10);
        for (int b = 0; b < 3; ++b) {
            int t = 0;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) coords(b, t++) = m.b_gram[b](i, j);
        }
        if (rank(coords) != 3) continue;
        // genericity certificate: a few sampled points with 3-dimensional
        // tangent data (full-rank condition matrix)
        bool ok = true;
        try {
            for (int s = 0; s < 5 && ok; ++s) (void)sample_point_v5(m, rng);
        } catch (const std::runtime_error&) {
            ok = false;
        }
        if (ok) return m;
    }
    throw std::runtime_error("build_v5_model: could not certify a generic net B");
}

V5Point sample_point_v5(const V5Model& model, Rng& rng) {
    const PrimeField& K = model.K;
    for (int tries = 0; tries < 100; ++tries) {
        FMat l1 = random_mat(K, 5, 1, rng);
        if (l1.is_zero()) continue;
        // <b, l1 ^ l2> = 0 for the three basis forms, linear in l2
        FMat cond(3, 5);
        for (int b = 0; b < 3; ++b) {
            FMat row = l1.transpose() * model.b_gram[b];
            for (int u = 0; u < 5; ++u) cond(b, u) = row(0, u);
        }
        if (rank(cond) != 3) continue; // degenerate draw: solution space too big
        FMat ker = kernel_basis(cond); // 2-dimensional, contains l1
        FMat l2 = ker * random_mat(K, ker.cols(), 1, rng);
        if (rank(hstack(l1, l2)) != 2) continue;
        return {l1, l2};
    }
    throw std::runtime_error("sample_point_v5: exhausted retries (degenerate B)");
}

FMat v5_fiber(const V5Point& pt) {
    FMat e(2, 5);
    for (int u = 0; u < 5; ++u) {
        e(0, u) = pt.l1(u, 0);
        e(1, u) = pt.l2(u, 0);
    }
    return e;
}

Fp gram_pairing(const FMat& a, const FMat& b) {
    Fp acc = zero_like(a(0, 0) + b(0, 0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
    return acc;
}

FPoly gram_to_poly(const PrimeField&, const FMat& q) {
    FPoly p(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            std::vector<int> e(4, 0);
            e[i] += 1;
            e[j] += 1;
            Fp c = (i == j) ? q(i, i) : q(i, j) + q(j, i);
            p.add_term(e, c);
        }
    return p;
}

FMat gram_coords(const PrimeField& K, const FMat& q) {
    FMat v = zeros(K, 10, 1);
    int t = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) v(t++, 0) = q(i, j);
    return v;
}

FMat gram_from_coords(const PrimeField& K, const FMat& v) {
    FMat q = zeros(K, 4, 4);
    int t = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            q(i, j) = v(t, 0);
            q(j, i) = v(t, 0);
            ++t;
        }
    return q;
}

std::vector<FMat> standard_cubic_ideal(const PrimeField& K) {
    Fp h = K.half();
    FMat q1 = zeros(K, 4, 4), q2 = zeros(K, 4, 4), q3 = zeros(K, 4, 4);
    q1(0, 2) = q1(2, 0) = h;      // xz
    q1(1, 1) = -K.one();          // -y^2
    q2(1, 3) = q2(3, 1) = h;      // yw
    q2(2, 2) = -K.one();          // -z^2
    q3(0, 3) = q3(3, 0) = h;      // xw
    q3(1, 2) = q3(2, 1) = -h;     // -yz
    return {q1, q2, q3};
}

std::vector<FMat> cubic_ideal_by_evaluation(const PrimeField& K, const FMat& g) {
    if (K.p < 11) throw std::invalid_argument("cubic_ideal_by_evaluation: field size must be >= 11");
    // parameter points (1,0), (t,1) for t = 0..6 give 8 distinct curve points
    std::vector<std::pair<Fp, Fp>> params;
    params.push_back({K.one(), K.zero()});
    for (int t = 0; t < 7; ++t) params.push_back({K((long long)t), K.one()});

    FMat cond((int)params.size(), 10);
    for (size_t r = 0; r < params.size(); ++r) {
        auto [s, t] = params[r];
        FMat v0 = zeros(K, 4, 1);
        v0(0, 0) = s * s * s;
        v0(1, 0) = s * s * t;
        v0(2, 0) = s * t * t;
        v0(3, 0) = t * t * t;
        FMat v = g * v0;
        int c = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                Fp coef = v(i, 0) * v(j, 0);
                if (i != j) coef += coef; // off-diagonal Gram entries count twice
                cond((int)r, c++) = coef;
            }
    }
    FMat ker = kernel_basis(cond);
    if (ker.cols() != 3) throw std::runtime_error("cubic_ideal_by_evaluation: ideal is not 3-dimensional");
    std::vector<FMat> ideal;
    for (int c = 0; c < 3; ++c) ideal.push_back(gram_from_coords(K, ker.col(c)));
    return ideal;
}

std::vector<FMat> cubic_ideal_by_transform(const PrimeField& K, const FMat& g) {
    auto gi = inverse(g, K.zero(), K.one());
    if (!gi) throw std::invalid_argument("cubic_ideal_by_transform: g not invertible");
    std::vector<FMat> out;
    for (const FMat& q : standard_cubic_ideal(K)) out.push_back(gi->transpose() * q * *gi);
    return out;
}

std::vector<FMat> syzygy_psi(const PrimeField& K, const std::vector<FMat>& ideal) {
    if (ideal.size() != 3) throw std::invalid_argument("syzygy_psi: need exactly 3 quadrics");
    // unknown linear forms l_0, l_1, l_2 with sum q_t l_t = 0; 12 unknowns,
    // one condition per cubic monomial
    std::vector<FPoly> q;
    for (int t = 0; t < 3; ++t) q.push_back(gram_to_poly(K, ideal[t]));

    std::vector<std::vector<int>> cubics;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            for (int c = b; c < 4; ++c) {
                std::vector<int> e(4, 0);
                e[a]++; e[b]++; e[c]++;
                cubics.push_back(e);
            }

    FMat cond(20, 12);
    for (int t = 0; t < 3; ++t)
        for (int u = 0; u < 4; ++u) {
            FPoly prod = q[t] * FPoly::variable(4, u, K.one());
            for (int m = 0; m < 20; ++m) cond(m, t * 4 + u) = prod.coeff(cubics[m]) + K.zero();
        }
    FMat ker = kernel_basis(cond);
    if (ker.cols() != 2) throw std::runtime_error("syzygy_psi: syzygy space has dimension " + std::to_string(ker.cols()) + ", expected 2");

    std::vector<FMat> psi(4, zeros(K, 3, 2));
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 3; ++t)
            for (int u = 0; u < 4; ++u) psi[u](t, s) = ker(t * 4 + u, s);
    return psi;
}

CubicPoint make_cubic_point(const PrimeField& K, const FMat& g) {
    std::vector<FMat> ideal = (K.p >= 11) ? cubic_ideal_by_evaluation(K, g) : cubic_ideal_by_transform(K, g);
    return {g, ideal, syzygy_psi(K, ideal)};
}

V22Model build_v22_model(const PrimeField& K, Rng& rng) {
    for (int tries = 0; tries < 100; ++tries) {
        FMat g0 = eye(K, 4);
        FMat g1 = random_invertible(K, 4, rng);
        CubicPoint t0, t1;
        try {
            t0 = make_cubic_point(K, g0);
            t1 = make_cubic_point(K, g1);
        } catch (const std::runtime_error&) {
            continue;
        }
        // the two ideals must span a 6-dimensional space of quadrics
        FMat span(6, 10);
        for (int c = 0; c < 3; ++c) {
            FMat v0 = gram_coords(K, t0.ideal[c]);
            FMat v1 = gram_coords(K, t1.ideal[c]);
            for (int t = 0; t < 10; ++t) {
                span(c, t) = v0(t, 0);
                span(3 + c, t) = v1(t, 0);
            }
        }
        if (rank(span) != 6) continue;

        // trace-annihilator of the 6 quadrics inside S^2 U; generically 4-dimensional
        FMat ann_cond(6, 10);
        for (int r = 0; r < 6; ++r) {
            const FMat& q = (r < 3) ? t0.ideal[r] : t1.ideal[r - 3];
            int c = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    Fp coef = q(i, j);
                    if (i != j) coef += q(j, i);
                    ann_cond(r, c++) = coef;
                }
        }
        FMat perp = kernel_basis(ann_cond);
        if (perp.cols() != 4) continue;

        // B* = a random 3-dimensional subspace of the 4-dimensional annihilator
        FMat mix = random_mat(K, 4, 3, rng);
        FMat bstar_coords = perp * mix;
        if (rank(bstar_coords) != 3) continue;
        std::vector<FMat> bstar;
        for (int c = 0; c < 3; ++c) bstar.push_back(gram_from_coords(K, bstar_coords.col(c)));

        // V = annihilator of B* in S^2 U*, must be 7-dimensional
        FMat v_cond(3, 10);
        for (int r = 0; r < 3; ++r) {
            int c = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    Fp coef = bstar[r](i, j);
                    if (i != j) coef += bstar[r](j, i);
                    v_cond(r, c++) = coef;
                }
        }
        FMat v_basis = kernel_basis(v_cond);
        if (v_basis.cols() != 7) continue;
        std::vector<FMat> v_ann;
        for (int c = 0; c < 7; ++c) v_ann.push_back(gram_from_coords(K, v_basis.col(c)));

        V22Model m{K, bstar, v_ann, {t0, t1}, 0};
        return m;
    }
    throw std::runtime_error("build_v22_model: exhausted retries");
}

std::vector<CubicPoint> extra_point_search(const V22Model& model, int candidates, Rng& rng) {
    const PrimeField& K = model.K;
    std::vector<CubicPoint> found;
    for (int n = 0; n < candidates; ++n) {
        FMat g = random_mat(K, 4, 4, rng);
        if (det(K, g).is_zero()) continue;
        std::vector<FMat> ideal;
        try {
            ideal = (K.p >= 11) ? cubic_ideal_by_evaluation(K, g) : cubic_ideal_by_transform(K, g);
        } catch (const std::runtime_error&) {
            continue;
        }
        bool annihilates = true;
        for (const FMat& q : ideal)
            for (const FMat& b : model.bstar_gram)
                if (!gram_pairing(q, b).is_zero()) { annihilates = false; break; }
        if (!annihilates) continue;
        try {
            found.push_back({g, ideal, syzygy_psi(K, ideal)});
        } catch (const std::runtime_error&) {
        }
    }
    return found;
}

} // namespace fano
