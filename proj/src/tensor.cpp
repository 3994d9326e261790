#include "fano/tensor.hpp"

namespace fano {

Fp wedge_top_coeff(const FMat& x, const FMat& y) {
    // signs of e_{ij} ^ e_{kl} against e0123 for complementary pairs
    // (01,23): +  (02,13): -  (03,12): +
    return x(0, 0) * y(5, 0) - x(1, 0) * y(4, 0) + x(2, 0) * y(3, 0) + x(3, 0) * y(2, 0) - x(4, 0) * y(1, 0) + x(5, 0) * y(0, 0);
}

FMat plucker(const PrimeField& K, const FMat& p, const FMat& q) {
    FMat v = zeros(K, 6, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) v(wedge_index4(i, j), 0) = p(i, 0) * q(j, 0) - p(j, 0) * q(i, 0);
    return v;
}

SpinSplit build_spin_split(const PrimeField& K) {
    SpinSplit s{K, zeros(K, 4, 4), zeros(K, 6, 1), FMat(), FMat(), FMat(), FMat()};

    // omega = e0 ^ e2 + e1 ^ e3
    s.omega_gram(0, 2) = K.one();
    s.omega_gram(2, 0) = -K.one();
    s.omega_gram(1, 3) = K.one();
    s.omega_gram(3, 1) = -K.one();
    s.omega_coords(wedge_index4(0, 2), 0) = K.one();
    s.omega_coords(wedge_index4(1, 3), 0) = K.one();

    // V is the kernel of v |-> coeff of v ^ omega
    FMat f = zeros(K, 1, 6);
    for (int t = 0; t < 6; ++t) {
        FMat e = zeros(K, 6, 1);
        e(t, 0) = K.one();
        f(0, t) = wedge_top_coeff(e, s.omega_coords);
    }
    s.v_basis = kernel_basis(f);
    if (s.v_basis.cols() != 5) throw std::logic_error("build_spin_split: V is not 5-dimensional");

    Fp f_omega = wedge_top_coeff(s.omega_coords, s.omega_coords);
    if (f_omega.is_zero()) throw std::logic_error("build_spin_split: omega pairs to zero");
    s.p_omega = f_omega.inv() * (s.omega_coords * f);
    s.p_v = eye(K, 6) - s.p_omega;

    // change of basis [v_basis | omega]: the first five rows of its inverse
    // read off V-coordinates and kill <omega>
    FMat chg = hstack(s.v_basis, s.omega_coords);
    auto inv = inverse(chg, K.zero(), K.one());
    if (!inv) throw std::logic_error("build_spin_split: degenerate splitting");
    s.coord_v = FMat(5, 6);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 6; ++j) s.coord_v(i, j) = (*inv)(i, j);
    return s;
}

Duality make_duality(const PrimeField& K, FMat m, Parity parity) {
    if (m.rows() != m.cols()) throw std::invalid_argument("make_duality: matrix not square");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j) {
            bool ok = (parity == Parity::Symmetric) ? (m(i, j) == m(j, i)) : (m(i, j) == -m(j, i));
            if (!ok) throw std::invalid_argument("make_duality: parity violated");
        }
    if (det(K, m).is_zero()) throw std::invalid_argument("make_duality: matrix is singular");
    return Duality{std::move(m), parity};
}

Net Net::zero(const PrimeField& K, Geometry g, int k) {
    if (g != Geometry::V5 && g != Geometry::V22) throw std::invalid_argument("Net: geometry must be v5 or v22");
    if (k < 1) throw std::invalid_argument("Net: k must be positive");
    Net n;
    n.geom = g;
    n.k = k;
    n.dim_u = (g == Geometry::V5) ? 5 : 4;
    n.b_gram.assign(3, zeros(K, n.dim_u, n.dim_u));
    n.c.assign(k, std::vector<std::array<Fp, 3>>(k, {K.zero(), K.zero(), K.zero()}));
    return n;
}

FMat Net::ambient(const PrimeField& K) const {
    int n = k * dim_u;
    FMat m = zeros(K, n, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int b = 0; b < 3; ++b) {
                Fp s = c[i][j][b];
                if (s.is_zero()) continue;
                for (int u = 0; u < dim_u; ++u)
                    for (int u2 = 0; u2 < dim_u; ++u2)
                        m(i * dim_u + u, j * dim_u + u2) += s * b_gram[b](u, u2);
            }
    return m;
}

FMat pair_condition(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin, int i, int j) {
    // T = a_i^t D a_j in U (x) U, then alternate and take V-coordinates
    FMat t = a.slices[i].transpose() * d.m * a.slices[j];
    FMat alt = zeros(K, 6, 1);
    for (int u = 0; u < 4; ++u)
        for (int u2 = u + 1; u2 < 4; ++u2) alt(wedge_index4(u, u2), 0) = t(u, u2) - t(u2, u);
    return spin.coord_v * alt;
}

std::vector<Fp> project_condition(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin) {
    if (a.dim_u != 4) throw std::invalid_argument("project_condition: quadric tensors have dimU = 4");
    if (d.parity != Parity::Symmetric) throw std::invalid_argument("project_condition: quadric duality is symmetric");
    if (d.m.rows() != a.dim_w) throw std::invalid_argument("project_condition: duality size mismatch");
    std::vector<Fp> out;
    out.reserve(5 * (size_t)a.dim_i * (a.dim_i - 1) / 2);
    for (int i = 0; i < a.dim_i; ++i)
        for (int j = i + 1; j < a.dim_i; ++j) {
            FMat v = pair_condition(K, a, d, spin, i, j);
            for (int t = 0; t < 5; ++t) out.push_back(v(t, 0));
        }
    return out;
}

} // namespace fano
