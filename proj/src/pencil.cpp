#include "fano/pencil.hpp"

#include <stdexcept>

namespace fano {

Pencil make_pencil(const PrimeField&, FMat q1, FMat q2) {
    if (q1.rows() != 6 || q1.cols() != 6 || q2.rows() != 6 || q2.cols() != 6)
        throw std::invalid_argument("make_pencil: quadrics must be 6x6");
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            if (!(q1(i, j) == q1(j, i)) || !(q2(i, j) == q2(j, i)))
                throw std::invalid_argument("make_pencil: quadrics must be symmetric");
    // reject proportional pairs
    FMat stacked(2, 36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            stacked(0, i * 6 + j) = q1(i, j);
            stacked(1, i * 6 + j) = q2(i, j);
        }
    if (rank(stacked) != 2) throw std::invalid_argument("make_pencil: quadrics are proportional");
    return {std::move(q1), std::move(q2)};
}

FPoly branch_sextic(const PrimeField& K, const Pencil& p, Rng& rng) {
    PolyMat m(6, 6, FPoly(2));
    FPoly lam = FPoly::variable(2, 0, K.one());
    FPoly mu = FPoly::variable(2, 1, K.one());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = p.q1(i, j) * lam + p.q2(i, j) * mu;
    return poly_det(K, m, rng);
}

bool sextic_is_squarefree(const PrimeField& K, const FPoly& f) {
    if (f.is_zero()) return false;
    if (f.nvars() != 2 || !f.is_homogeneous())
        throw std::invalid_argument("sextic_is_squarefree: expected a binary form");
    long deg = f.total_degree();
    // dehomogenize at mu = 1; the multiplicity of the root [1:0] is the
    // degree drop
    UPoly u;
    u.c.assign(deg + 1, K.zero());
    for (const auto& [e, c] : f.terms()) u.c[e[0]] = c;
    u.trim();
    long mu_mult = deg - u.degree();
    if (mu_mult > 1) return false;
    UPoly g = upoly_gcd(K, u, upoly_derivative(K, u));
    return g.degree() == 0;
}

bool is_smooth_pencil(const PrimeField& K, const Pencil& p, Rng& rng) {
    FPoly f = branch_sextic(K, p, rng);
    if (f.is_zero() || f.total_degree() != 6) return false;
    return sextic_is_squarefree(K, f);
}

} // namespace fano
