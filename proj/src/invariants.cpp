#include "fano/invariants.hpp"

#include <set>
#include <stdexcept>

namespace fano {

FMat dd_matrix(const PrimeField& K, const Tensor3& a, const SpinSplit& spin) {
    int dim_i = a.dim_i, dim_w = a.dim_w;
    if (a.dim_u != 4) throw std::invalid_argument("dd_matrix: quadric tensors have dimU = 4");
    if (dim_w != dim_i + 1) throw std::invalid_argument("dd_matrix: quadric dims are (k-1, k)");
    int n = dim_w * (dim_w - 1) / 2; // = C(k,2) = dim S^2 I as well

    auto phi = [&](int w, int u, int i) { return a.at(i, w, u); };

    // S^2 I basis: pairs (i <= j), lex
    std::vector<std::pair<int, int>> sym_pairs;
    for (int i = 0; i < dim_i; ++i)
        for (int j = i; j < dim_i; ++j) sym_pairs.emplace_back(i, j);
    if ((int)sym_pairs.size() != n) throw std::logic_error("dd_matrix: dimension mismatch");

    // omega's wedge coordinates pick out the contributing (u, u') pairs
    std::vector<std::pair<std::pair<int, int>, Fp>> omega_terms;
    for (int u = 0; u < 4; ++u)
        for (int u2 = u + 1; u2 < 4; ++u2) {
            Fp c = spin.omega_coords(wedge_index4(u, u2), 0);
            if (!c.is_zero()) omega_terms.push_back({{u, u2}, c});
        }

    FMat m = zeros(K, n, n);
    int row = 0;
    for (int w = 0; w < dim_w; ++w)
        for (int w2 = w + 1; w2 < dim_w; ++w2, ++row) {
            // S^2(phi) on (e_w* ^ e_w2*) (x) omega, expanded in S^2 I
            for (const auto& [uu, c] : omega_terms) {
                auto [u, u2] = uu;
                for (int col = 0; col < n; ++col) {
                    auto [i, j] = sym_pairs[col];
                    // coefficient of e_i e_j in phi(w,u).phi(w2,u2) - phi(w,u2).phi(w2,u)
                    Fp term = phi(w, u, i) * phi(w2, u2, j) - phi(w, u2, i) * phi(w2, u, j);
                    if (i != j) term += phi(w, u, j) * phi(w2, u2, i) - phi(w, u2, j) * phi(w2, u, i);
                    m(row, col) += c * term;
                }
            }
        }
    return m;
}

Fp dd_invariant(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin) {
    if (d.parity != Parity::Symmetric) throw std::invalid_argument("dd_invariant: quadric duality is symmetric");
    if (d.m.rows() != a.dim_w) throw std::invalid_argument("dd_invariant: duality size mismatch");
    return det(K, dd_matrix(K, a, spin));
}

namespace {

// All subspaces of F_q^k, each as a full-row-rank RREF matrix (rows = basis).
// Span growth one generator at a time, deduplicated via the canonical RREF
// form; q^k <= 81 keeps this tiny.
std::vector<FMat> all_subspaces(const PrimeField& K, int k) {
    std::uint64_t q = K.p;
    std::uint64_t npts = 1;
    for (int i = 0; i < k; ++i) npts *= q;

    auto decode = [&](std::uint64_t code) {
        FMat v(1, k);
        for (int i = 0; i < k; ++i) {
            v(0, i) = K((long long)(code % q));
            code /= q;
        }
        return v;
    };

    std::vector<FMat> out;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<FMat> frontier{zeros(K, 0, k)};
    for (int dim = 1; dim <= k; ++dim) {
        std::vector<FMat> next;
        for (const FMat& base : frontier) {
            for (std::uint64_t code = 1; code < npts; ++code) {
                FMat cand(base.rows() + 1, k);
                for (int i = 0; i < base.rows(); ++i)
                    for (int j = 0; j < k; ++j) cand(i, j) = base(i, j);
                FMat v = decode(code);
                for (int j = 0; j < k; ++j) cand(base.rows(), j) = v(0, j);
                std::vector<int> piv = rref_inplace(cand);
                if ((int)piv.size() != dim) continue; // the new vector was already in the span
                std::vector<std::uint64_t> key;
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < k; ++j) key.push_back(cand(i, j).v);
                if (!seen.insert(key).second) continue;
                FMat canon(dim, k);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < k; ++j) canon(i, j) = cand(i, j);
                next.push_back(canon);
            }
        }
        for (const FMat& s : next) out.push_back(s);
        frontier = std::move(next);
    }
    return out;
}

Fp restrict_entry(const Net& n, const PrimeField& K, const FMat& i1, const FMat& i2, int r1, int r2, int b) {
    Fp acc = K.zero();
    for (int a = 0; a < n.k; ++a)
        for (int c = 0; c < n.k; ++c) acc += i1(r1, a) * n.c[a][c][b] * i2(r2, c);
    return acc;
}

} // namespace

SemistabilityWitness wall_semistable(const Net& n) {
    std::uint64_t q = 0;
    for (int b = 0; b < 3 && q == 0; ++b) q = n.c[0][0][b].p;
    for (const FMat& g : n.b_gram)
        for (const Fp& x : g.data())
            if (x.p) q = x.p;
    if (q != 2 && q != 3) throw std::invalid_argument("wall_semistable: net must live over F_2 or F_3");
    int k = n.k;
    if ((q == 3 && k > 3) || (q == 2 && k > 4))
        throw std::invalid_argument("wall_semistable: enumeration supports k <= 3 over F_3 and k <= 4 over F_2");
    PrimeField K(q);

    std::vector<FMat> subs = all_subspaces(K, k);
    for (const FMat& i1 : subs)
        for (const FMat& i2 : subs) {
            if (i1.rows() + i2.rows() <= k) continue;
            bool zero = true;
            for (int b = 0; b < 3 && zero; ++b)
                for (int r1 = 0; r1 < i1.rows() && zero; ++r1)
                    for (int r2 = 0; r2 < i2.rows() && zero; ++r2)
                        if (!restrict_entry(n, K, i1, i2, r1, r2, b).is_zero()) zero = false;
            if (zero) return {false, i1, i2};
        }
    return {true, FMat(), FMat()};
}

bool verify_unstable_witness(const PrimeField& K, const Net& n, const SemistabilityWitness& w) {
    if (w.semistable) return false;
    if (w.i1.rows() + w.i2.rows() <= n.k) return false;
    for (int b = 0; b < 3; ++b)
        for (int r1 = 0; r1 < w.i1.rows(); ++r1)
            for (int r2 = 0; r2 < w.i2.rows(); ++r2)
                if (!restrict_entry(n, K, w.i1, w.i2, r1, r2, b).is_zero()) return false;
    return true;
}

FPoly apolar_quartic(const V22Model& model, Rng& rng) {
    const PrimeField& K = model.K;
    PolyMat m(4, 4, FPoly(3));
    for (int u = 0; u < 4; ++u)
        for (int u2 = 0; u2 < 4; ++u2) {
            FPoly e(3);
            for (int b = 0; b < 3; ++b) e = e + model.bstar_gram[b](u, u2) * FPoly::variable(3, b, K.one());
            m(u, u2) = e;
        }
    FPoly q = poly_det(K, m, rng);
    if (q.is_zero()) throw std::runtime_error("apolar_quartic: net determinant vanishes identically (degenerate model)");
    if (q.total_degree() != 4 || !q.is_homogeneous())
        throw std::runtime_error("apolar_quartic: determinant is not a homogeneous quartic");
    return q;
}

} // namespace fano
