#include "fano/fpoly.hpp"

#include <stdexcept>

namespace fano {

namespace {

// all exponent vectors of total degree d in nvars variables, grlex order
void enumerate_monomials(int nvars, int d, std::vector<std::vector<int>>& out) {
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == nvars - 1) {
            e[pos] = rem;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, d);
}

// common homogeneous entry degree, or -1 when the matrix is not of that shape
long common_entry_degree(const PolyMat& m) {
    long d = -1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const FPoly& e = m(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous()) return -1;
            long ed = e.total_degree();
            if (d < 0) d = ed;
            else if (ed != d) return -1;
        }
    return d;
}

FPoly interp_det(const PrimeField& K, const PolyMat& m, long entry_deg, Rng& rng) {
    int n = m.rows();
    int nvars = m(0, 0).nvars();
    long deg = entry_deg * n;
    std::vector<std::vector<int>> mono;
    enumerate_monomials(nvars, (int)deg, mono);
    int nm = (int)mono.size();

    for (int attempt = 0; attempt < 10; ++attempt) {
        // random points, scalar determinants, then solve for the coefficients
        int npts = nm + 5;
        FMat vander = zeros(K, npts, nm);
        FMat vals = zeros(K, npts, 1);
        std::vector<std::vector<Fp>> pts(npts);
        for (int s = 0; s < npts; ++s) {
            std::vector<Fp> x(nvars);
            for (int i = 0; i < nvars; ++i) x[i] = K.random(rng);
            pts[s] = x;
            for (int t = 0; t < nm; ++t) {
                Fp v = K.one();
                for (int i = 0; i < nvars; ++i)
                    for (int k = 0; k < mono[t][i]; ++k) v = v * x[i];
                vander(s, t) = v;
            }
            FMat ev = zeros(K, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ev(i, j) = m(i, j).eval(x, K.one());
            vals(s, 0) = det(K, ev);
        }
        FMat sq = zeros(K, nm, nm);
        FMat rhs = zeros(K, nm, 1);
        for (int s = 0; s < nm; ++s) {
            for (int t = 0; t < nm; ++t) sq(s, t) = vander(s, t);
            rhs(s, 0) = vals(s, 0);
        }
        if (rank(sq) != nm) continue; // bad luck with the sample points
        auto sol = solve(sq, rhs, K.zero());
        if (!sol) continue;
        FPoly result(nvars);
        for (int t = 0; t < nm; ++t) result.add_term(mono[t], (*sol)(t, 0));
        bool ok = true;
        for (int s = nm; s < npts && ok; ++s) ok = (result.eval(pts[s], K.one()) == vals(s, 0));
        if (ok) return result;
    }
    throw std::runtime_error("poly_det: interpolation failed to stabilize");
}

} // namespace

FPoly poly_det(const PrimeField& K, const PolyMat& m, Rng& rng) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: matrix not square");
    int n = m.rows();
    if (n == 0) return FPoly::constant(0, K.one());
    int nvars = m(0, 0).nvars();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j).nvars() != nvars) throw std::invalid_argument("poly_det: entries in different variable counts");
    if (n <= 6) return detail::det_expansion(m, K.one());
    long d = common_entry_degree(m);
    if (d < 0) return detail::det_expansion(m, K.one());
    if (d == 0) { // constant matrix
        FMat ev = zeros(K, n, n);
        std::vector<int> z(nvars, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ev(i, j) = m(i, j).coeff(z) + K.zero();
        return FPoly::constant(nvars, det(K, ev));
    }
    return interp_det(K, m, d, rng);
}

MPoly<Rat> poly_det(const Mat<MPoly<Rat>>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: matrix not square");
    if (m.rows() == 0) return MPoly<Rat>::constant(0, Rat(1));
    int nvars = m(0, 0).nvars();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).nvars() != nvars) throw std::invalid_argument("poly_det: entries in different variable counts");
    return detail::det_expansion(m, Rat(1));
}

UPoly upoly_derivative(const PrimeField& K, const UPoly& f) {
    UPoly d;
    for (size_t i = 1; i < f.c.size(); ++i) d.c.push_back(K((long long)i) * f.c[i]);
    d.trim();
    return d;
}

namespace {

UPoly upoly_rem(const PrimeField& K, UPoly a, const UPoly& b) {
    Fp lead_inv = b.c.back().inv();
    while (a.degree() >= b.degree()) {
        Fp f = a.c.back() * lead_inv;
        int shift = a.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] = a.c[i + shift] - f * b.c[i];
        a.trim();
        if (a.is_zero()) break;
    }
    (void)K;
    return a;
}

UPoly upoly_mul(const PrimeField& K, const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

UPoly upoly_mulmod(const PrimeField& K, const UPoly& a, const UPoly& b, const UPoly& m) {
    return upoly_rem(K, upoly_mul(K, a, b), m);
}

UPoly upoly_powmod(const PrimeField& K, UPoly base, std::uint64_t e, const UPoly& m) {
    UPoly r;
    r.c = {K.one()};
    base = upoly_rem(K, std::move(base), m);
    while (e) {
        if (e & 1) r = upoly_mulmod(K, r, base, m);
        base = upoly_mulmod(K, base, base, m);
        e >>= 1;
    }
    return r;
}

// exact quotient, used only when the division is known to be exact
UPoly upoly_divexact(const PrimeField& K, UPoly a, const UPoly& b) {
    UPoly q;
    if (a.degree() < b.degree()) return q;
    q.c.assign(a.degree() - b.degree() + 1, K.zero());
    Fp lead_inv = b.c.back().inv();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        Fp f = a.c.back() * lead_inv;
        q.c[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] = a.c[i + shift] - f * b.c[i];
        a.trim();
    }
    q.trim();
    return q;
}

// equal-degree splitting of a monic product of distinct linear factors
void collect_roots(const PrimeField& K, const UPoly& g, std::vector<Fp>& out) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-(g.c[0] * g.c[1].inv()));
        return;
    }
    // split with (x + a)^((p-1)/2) - 1 for successive shifts a
    std::uint64_t half = (K.p - 1) / 2;
    for (std::uint64_t a = 0;; ++a) {
        UPoly shifted;
        shifted.c = {K((long long)a), K.one()};
        UPoly pw = upoly_powmod(K, shifted, half, g);
        if (!pw.c.empty()) pw.c[0] = pw.c[0] - K.one();
        pw.trim();
        UPoly h = upoly_gcd(K, g, pw);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            collect_roots(K, h, out);
            collect_roots(K, upoly_divexact(K, g, h), out);
            return;
        }
    }
}

} // namespace

UPoly upoly_gcd(const PrimeField& K, UPoly a, UPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        UPoly r = upoly_rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Fp inv = a.c.back().inv();
        for (Fp& x : a.c) x = x * inv;
    }
    return a;
}

std::vector<Fp> upoly_roots(const PrimeField& K, const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("upoly_roots: zero polynomial");
    std::vector<Fp> roots;
    if (K.p <= 4096) {
        for (std::uint64_t v = 0; v < K.p; ++v) {
            Fp x{v, K.p};
            if (f.eval(x, K).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    // g = gcd(x^p - x, f) is the squarefree product of the linear factors
    UPoly x;
    x.c = {K.zero(), K.one()};
    UPoly xp = upoly_powmod(K, x, K.p, f);
    // xp - x
    if (xp.c.size() < 2) xp.c.resize(2, K.zero());
    xp.c[1] = xp.c[1] - K.one();
    xp.trim();
    UPoly g = upoly_gcd(K, f, xp);
    collect_roots(K, g, roots);
    std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.v < b.v; });
    return roots;
}

UPoly upoly_interpolate(const PrimeField& K, const std::vector<Fp>& xs, const std::vector<Fp>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("upoly_interpolate: size mismatch");
    int n = (int)xs.size();
    UPoly acc; // running sum
    for (int i = 0; i < n; ++i) {
        // Lagrange basis polynomial l_i
        UPoly li;
        li.c = {K.one()};
        Fp denom = K.one();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            // multiply by (x - xs[j])
            UPoly next;
            next.c.assign(li.c.size() + 1, K.zero());
            for (size_t t = 0; t < li.c.size(); ++t) {
                next.c[t + 1] = next.c[t + 1] + li.c[t];
                next.c[t] = next.c[t] - xs[j] * li.c[t];
            }
            li = std::move(next);
            denom = denom * (xs[i] - xs[j]);
        }
        Fp scale = ys[i] * denom.inv();
        if (acc.c.size() < li.c.size()) acc.c.resize(li.c.size(), K.zero());
        for (size_t t = 0; t < li.c.size(); ++t) acc.c[t] = acc.c[t] + scale * li.c[t];
    }
    acc.trim();
    return acc;
}

} // namespace fano
