#include "fano/jumping.hpp"

#include <stdexcept>

namespace fano {

LinearFormMatrix make_linear_form_matrix(PolyMat m) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("LinearFormMatrix: empty matrix");
    int nvars = m(0, 0).nvars();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const FPoly& e = m(i, j);
            if (e.nvars() != nvars) throw std::invalid_argument("LinearFormMatrix: mixed variable counts");
            if (!e.is_zero() && (e.total_degree() != 1 || !e.is_homogeneous()))
                throw std::invalid_argument("LinearFormMatrix: entries must be linear forms");
        }
    return {nvars, std::move(m)};
}

LinearFormMatrix jumping_lines_matrix(const PrimeField& K, const MonadData& m) {
    if (m.tag.kind != Geometry::Quadric) throw std::invalid_argument("jumping_lines_matrix: quadric monads only");
    int di = m.a.dim_i, dw = m.a.dim_w;
    PolyMat b(di, dw, FPoly(4));
    for (int i = 0; i < di; ++i)
        for (int w = 0; w < dw; ++w) {
            FPoly e(4);
            for (int u = 0; u < 4; ++u) e = e + m.a.at(i, w, u) * FPoly::variable(4, u, K.one());
            b(i, w) = e;
        }
    return make_linear_form_matrix(std::move(b));
}

std::vector<FPoly> maximal_minors(const PrimeField& K, const LinearFormMatrix& b, Rng& rng) {
    int r = b.m.rows(), c = b.m.cols();
    if (r != c - 1) throw std::invalid_argument("maximal_minors: need rows = cols - 1");
    std::vector<FPoly> minors;
    for (int drop = 0; drop < c; ++drop) {
        PolyMat sub(r, r, FPoly(b.nvars));
        for (int i = 0; i < r; ++i) {
            int t = 0;
            for (int j = 0; j < c; ++j) {
                if (j == drop) continue;
                sub(i, t++) = b.m(i, j);
            }
        }
        FPoly d = poly_det(K, sub, rng);
        minors.push_back(drop % 2 == 0 ? d : -d);
    }
    return minors;
}

QPoly jumping_curve_hilbert(int k) {
    // chi(F(t)) = (k-1) C(t+3,3) - k C(t+2,3) + C(t-k+3,3)
    return Rat(k - 1) * binom_poly(3, 3) - Rat(k) * binom_poly(2, 3) + binom_poly(3 - k, 3);
}

long jumping_curve_degree(int k) {
    if (k < 2) throw std::invalid_argument("jumping_curve_degree: k >= 2");
    QPoly h = jumping_curve_hilbert(k);
    if (h.degree() != 1) throw std::logic_error("jumping_curve_degree: Hilbert polynomial is not linear");
    Rat lead = h.leading();
    if (!lead.is_integer()) throw std::logic_error("jumping_curve_degree: non-integral degree");
    return (long)lead.q.get_num().get_si();
}

bool point_is_jumping(const PrimeField& K, const MonadData& m, const FMat& u) {
    if (m.tag.kind != Geometry::Quadric) throw std::invalid_argument("point_is_jumping: quadric monads only");
    int di = m.a.dim_i, dw = m.a.dim_w;
    FMat ev(di, dw, K.zero());
    for (int i = 0; i < di; ++i)
        for (int w = 0; w < dw; ++w) {
            Fp acc = K.zero();
            for (int t = 0; t < 4; ++t) acc += m.a.at(i, w, t) * u(t, 0);
            ev(i, w) = acc;
        }
    return rank(ev) < di;
}

LinearFormMatrix jumping_conics_matrix(const PrimeField& K, const Net& n) {
    if (n.geom != Geometry::V22) throw std::invalid_argument("jumping_conics_matrix: v22 nets only");
    PolyMat m(n.k, n.k, FPoly(3));
    for (int i = 0; i < n.k; ++i)
        for (int j = 0; j < n.k; ++j) {
            FPoly e(3);
            for (int b = 0; b < 3; ++b) e = e + n.c[i][j][b] * FPoly::variable(3, b, K.one());
            m(i, j) = e;
        }
    return make_linear_form_matrix(std::move(m));
}

FPoly jumping_conics_curve(const PrimeField& K, const Net& n, Rng& rng) {
    LinearFormMatrix m = jumping_conics_matrix(K, n);
    return poly_det(K, m.m, rng);
}

} // namespace fano
