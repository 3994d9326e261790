#include "fano/monads.hpp"

#include <future>
#include <stdexcept>

#include "fano/invariants.hpp"

namespace fano {

int min_sample_k(Geometry g) {
    switch (g) {
        case Geometry::Quadric: return 2;
        case Geometry::V5: return 2;
        case Geometry::V22: return 1;
    }
    return 0;
}

int max_sample_k(Geometry g) {
    switch (g) {
        case Geometry::Quadric: return 9;
        case Geometry::V5: return 4;
        case Geometry::V22: return 2;
    }
    return 0;
}

long expected_delta(Geometry g, int k) {
    switch (g) {
        case Geometry::Quadric: return 6L * k - 6;
        case Geometry::V5: return 4L * k - 3;
        case Geometry::V22: return 2L * k; // 2 c2 - g - 2 with c2 = k + 7, g = 12
    }
    return 0;
}

namespace {

// Linear conditions on a candidate row X (dimW x dimU, flattened w-major)
// coming from the pairs (j, new row) of the quadric equations.  Returns a
// (5 * nprev) x (dimW * dimU) matrix.
FMat quadric_row_conditions(const PrimeField& K, const Tensor3& a, const Duality& d, const SpinSplit& spin, int nprev) {
    int dim_w = a.dim_w;
    FMat m = zeros(K, 5 * nprev, dim_w * 4);
    for (int j = 0; j < nprev; ++j) {
        FMat pj = a.slices[j].transpose() * d.m; // 4 x dimW
        for (int w = 0; w < dim_w; ++w)
            for (int u = 0; u < 4; ++u) {
                // T = pj.col(w) placed in column u; alternate and project
                FMat alt = zeros(K, 6, 1);
                for (int b = 0; b < 4; ++b) {
                    if (b == u) continue;
                    Fp t = pj(b, w); // T[b][u]
                    if (b < u)
                        alt(wedge_index4(b, u), 0) += t;
                    else
                        alt(wedge_index4(u, b), 0) -= t;
                }
                FMat cond = spin.coord_v * alt;
                for (int t = 0; t < 5; ++t) m(5 * j + t, w * 4 + u) = cond(t, 0);
            }
    }
    return m;
}

void set_row_from_vector(Tensor3& a, int i, const FMat& x) {
    for (int w = 0; w < a.dim_w; ++w)
        for (int u = 0; u < a.dim_u; ++u) a.at(i, w, u) = x(w * a.dim_u + u, 0);
}

// Greedy row construction inside an optional extra linear constraint on some
// rows.  With certify_generic, a row whose condition system drops below full
// rank is redrawn.
struct GreedyOptions {
    bool certify_generic = true;
    const FMat* row0_extra = nullptr; // extra conditions imposed on row 0
};

bool greedy_quadric_rows(const PrimeField& K, Tensor3& a, const Duality& d, const SpinSplit& spin, Rng& rng, const GreedyOptions& opt) {
    int dim_i = a.dim_i, dim_w = a.dim_w;
    for (int i = 0; i < dim_i; ++i) {
        FMat cond = quadric_row_conditions(K, a, d, spin, i);
        if (i == 0 && opt.row0_extra && opt.row0_extra->rows() > 0) cond = *opt.row0_extra;
        FMat x;
        if (cond.rows() == 0) {
            x = random_mat(K, dim_w * 4, 1, rng);
        } else {
            if (opt.certify_generic && rank(cond) != cond.rows()) return false;
            FMat ker = kernel_basis(cond);
            if (ker.cols() == 0) return false;
            x = ker * random_mat(K, ker.cols(), 1, rng);
        }
        if (x.is_zero()) return false;
        set_row_from_vector(a, i, x);
    }
    return true;
}

// Explicit solution of the quadric equations: slice i carries f_i in W-slot i
// and f_{i+1} in W-slot i+1, so every pairwise 2-form vanishes outright.  For
// generic f's the fiber maps are surjective everywhere, which the greedy
// construction cannot reach once k >= 6 (it stays on a component where every
// fiber degenerates and DD vanishes identically).
Tensor3 banded_seed(int k, const PrimeField& K, Rng& rng) {
    Tensor3 a = Tensor3::zero(K, k - 1, k, 4);
    std::vector<FMat> f;
    for (int w = 0; w < k; ++w) f.push_back(random_mat(K, 4, 1, rng));
    for (int i = 0; i + 1 < k; ++i)
        for (int u = 0; u < 4; ++u) {
            a.at(i, i, u) = f[i](u, 0);
            a.at(i, i + 1, u) = f[i + 1](u, 0);
        }
    return a;
}

// Re-randomize each row inside the exact solution space of the conditions
// against all other rows.  Every move stays in the zero locus and inside the
// component of the current point.
void gibbs_resample_rows(const PrimeField& K, Tensor3& a, const Duality& d, const SpinSplit& spin, int sweeps, Rng& rng) {
    int dim_i = a.dim_i, dim_w = a.dim_w;
    for (int sweep = 0; sweep < sweeps; ++sweep)
        for (int i = 0; i < dim_i; ++i) {
            Tensor3 others = Tensor3::zero(K, dim_i - 1, dim_w, 4);
            int t = 0;
            for (int j = 0; j < dim_i; ++j)
                if (j != i) others.slices[t++] = a.slices[j];
            FMat cond = quadric_row_conditions(K, others, d, spin, dim_i - 1);
            FMat x;
            if (cond.rows() == 0) {
                x = random_mat(K, dim_w * 4, 1, rng);
            } else {
                FMat ker = kernel_basis(cond);
                if (ker.cols() == 0) continue;
                x = ker * random_mat(K, ker.cols(), 1, rng);
            }
            if (x.is_zero()) continue;
            set_row_from_vector(a, i, x);
        }
}

} // namespace

MonadData sample_quadric_monad(int k, const PrimeField& K, const SpinSplit& spin, Rng& rng) {
    if (k < 2 || k > 9)
        throw std::invalid_argument("sample_quadric_monad: supported range is 2 <= k <= 9 (greedy rows need 4k - 5(i-1) > 0)");
    MonadDims dims = monad_dims(Geometry::Quadric, k);
    Duality d = make_duality(K, eye(K, dims.dim_w), Parity::Symmetric);

    // greedy rows first; from k = 6 on the greedy branch of the solution
    // variety is everywhere-degenerate (DD = 0), so fall through to the
    // banded seed randomized by exact row resampling
    for (int attempt = 0; attempt < 12; ++attempt) {
        Tensor3 a = Tensor3::zero(K, dims.dim_i, dims.dim_w, dims.dim_u);
        if (!greedy_quadric_rows(K, a, d, spin, rng, GreedyOptions{true, nullptr})) continue;
        for (const Fp& v : project_condition(K, a, d, spin))
            if (!v.is_zero()) throw std::logic_error("sample_quadric_monad: greedy solution violates the equations");
        if (dd_invariant(K, a, d, spin).is_zero()) break;
        return {geometry_tag(Geometry::Quadric), k, K.p, std::move(a), d};
    }
    for (int attempt = 0; attempt < 50; ++attempt) {
        Tensor3 a = banded_seed(k, K, rng);
        gibbs_resample_rows(K, a, d, spin, 3, rng);
        bool solves = true;
        for (const Fp& v : project_condition(K, a, d, spin))
            if (!v.is_zero()) solves = false;
        if (!solves) throw std::logic_error("sample_quadric_monad: row resampling left the zero locus");
        if (dd_invariant(K, a, d, spin).is_zero()) continue;
        return {geometry_tag(Geometry::Quadric), k, K.p, std::move(a), d};
    }
    throw std::runtime_error("sample_quadric_monad: exhausted 50 resamples (k out of range or field too small)");
}

std::pair<MonadData, QuadricPoint> sample_degenerate_quadric_monad(int k, const PrimeField& K, const SpinSplit& spin, Rng& rng) {
    if (k < 2 || k > 9) throw std::invalid_argument("sample_degenerate_quadric_monad: supported range is 2 <= k <= 9");
    MonadDims dims = monad_dims(Geometry::Quadric, k);
    Duality d = make_duality(K, eye(K, dims.dim_w), Parity::Symmetric);
    QuadricModel qm{K, spin};
    for (int attempt = 0; attempt < 50; ++attempt) {
        QuadricPoint pt = sample_point_quadric(qm, rng);
        // row 0 must vanish on the fiber at pt: omega(row_w, p_s) = 0 for all w, s
        FMat fib = quadric_fiber(spin, pt); // 2 x 4
        FMat extra = zeros(K, 2 * dims.dim_w, dims.dim_w * 4);
        for (int w = 0; w < dims.dim_w; ++w)
            for (int s = 0; s < 2; ++s)
                for (int u = 0; u < 4; ++u) extra(2 * w + s, w * 4 + u) = fib(s, u);
        Tensor3 a = Tensor3::zero(K, dims.dim_i, dims.dim_w, dims.dim_u);
        GreedyOptions opt{false, &extra};
        if (!greedy_quadric_rows(K, a, d, spin, rng, opt)) continue;
        // rows after the first must still satisfy the pair conditions against row 0
        bool ok = true;
        for (const Fp& v : project_condition(K, a, d, spin))
            if (!v.is_zero()) ok = false;
        if (!ok) continue;
        return {MonadData{geometry_tag(Geometry::Quadric), k, K.p, std::move(a), d}, pt};
    }
    throw std::runtime_error("sample_degenerate_quadric_monad: exhausted resamples");
}

namespace {

Net random_net(const PrimeField& K, Geometry g, int k, const std::vector<FMat>& b_gram, Rng& rng) {
    Net n = Net::zero(K, g, k);
    n.b_gram = b_gram;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            for (int b = 0; b < 3; ++b) n.set_coeff(i, j, b, K.random(rng));
    return n;
}

Net net_lincomb(const Net& a, const Fp& t, const Net& b) {
    Net n = a;
    for (int i = 0; i < n.k; ++i)
        for (int j = 0; j < n.k; ++j)
            for (int c = 0; c < 3; ++c) n.c[i][j][c] = a.c[i][j][c] + t * b.c[i][j][c];
    return n;
}

// Roots in F_p of t |-> f(ambient(n0 + t n1)) where f is det or pfaffian;
// by interpolation when the field is large enough, by direct scan otherwise.
std::vector<Fp> pencil_roots(const PrimeField& K, const Net& n0, const Net& n1, bool use_pfaffian, int degree_bound) {
    auto value_at = [&](const Fp& t) {
        FMat m = net_lincomb(n0, t, n1).ambient(K);
        return use_pfaffian ? pfaffian(K, m) : det(K, m);
    };
    if ((long long)K.p > degree_bound + 1) {
        std::vector<Fp> xs, ys;
        for (int t = 0; t <= degree_bound; ++t) {
            xs.push_back(K(t));
            ys.push_back(value_at(K(t)));
        }
        UPoly f = upoly_interpolate(K, xs, ys);
        if (f.is_zero()) return {}; // degenerate pencil, nothing usable
        return upoly_roots(K, f);
    }
    std::vector<Fp> roots;
    for (std::uint64_t v = 0; v < K.p; ++v) {
        Fp t{v, K.p};
        if (value_at(t).is_zero()) roots.push_back(t);
    }
    return roots;
}

} // namespace

namespace {

// shared pencil walk: draw pencils of random nets until a root of det or
// pfaffian lands on the exact rank target
std::optional<Net> pencil_rank_search(const PrimeField& K, Geometry g, int k, const std::vector<FMat>& grams, int target,
                                      bool use_pfaffian, int degree_bound, Rng& rng, PencilStats* stats) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Net n0 = random_net(K, g, k, grams, rng);
        Net n1 = random_net(K, g, k, grams, rng);
        if (stats) ++stats->pencils;
        std::vector<Fp> roots = pencil_roots(K, n0, n1, use_pfaffian, degree_bound);
        if (stats) stats->roots_seen += (int)roots.size();
        if (!roots.empty()) {
            std::uint64_t start = rng.below(roots.size());
            for (size_t r = 0; r < roots.size(); ++r) {
                Fp t = roots[(start + r) % roots.size()];
                Net n = net_lincomb(n0, t, n1);
                if (rank(n.ambient(K)) == target) return n;
            }
        }
        if (stats) ++stats->rejected_pencils;
    }
    return std::nullopt;
}

} // namespace

Net sample_v5_net(int k, const V5Model& model, Rng& rng, PencilStats* stats) {
    if (k < 2 || k > 4) throw std::invalid_argument("sample_v5_net: supported range is 2 <= k <= 4");
    const PrimeField& K = model.K;
    int target = 4 * k + 2;
    if (k == 2 || k == 3) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            Net n = random_net(K, Geometry::V5, k, model.b_gram, rng);
            if (rank(n.ambient(K)) == target) return n;
        }
        throw std::runtime_error("sample_v5_net: exhausted retries");
    }
    // k = 4: find a pencil member with corank 2 via a pfaffian root
    auto n = pencil_rank_search(K, Geometry::V5, k, model.b_gram, target, true, 10, rng, stats);
    if (!n) throw std::runtime_error("sample_v5_net: exhausted 100 pencils without a usable root (try another prime)");
    return *n;
}

Net sample_v22_net(int k, const V22Model& model, Rng& rng, PencilStats* stats) {
    if (k < 1 || k > 2) throw std::invalid_argument("sample_v22_net: supported range is 1 <= k <= 2");
    const PrimeField& K = model.K;
    int target = 3 * k + 1;
    if (k == 1) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            Net n = random_net(K, Geometry::V22, k, model.bstar_gram, rng);
            if (rank(n.ambient(K)) == 4) return n; // avoids the apolar quartic
        }
        throw std::runtime_error("sample_v22_net: exhausted retries");
    }
    auto n = pencil_rank_search(K, Geometry::V22, k, model.bstar_gram, target, false, 8, rng, stats);
    if (!n) throw std::runtime_error("sample_v22_net: exhausted 100 pencils without a usable root (try another prime)");
    return *n;
}

std::pair<V22Model, Net> sample_v22_model_net(int k, const PrimeField& K, Rng& rng, int model_retries) {
    for (int t = 0; t < model_retries; ++t) {
        V22Model model = build_v22_model(K, rng);
        try {
            Net n = sample_v22_net(k, model, rng);
            return {std::move(model), std::move(n)};
        } catch (const std::runtime_error&) {
            // this model's rank stratum has no usable points over this field
        }
    }
    throw std::runtime_error("sample_v22_model_net: no model produced a rank-certified net (field too small?)");
}

FMat reassemble_ambient(const PrimeField& K, const MonadData& m) {
    int du = m.a.dim_u, n = m.a.dim_i * du;
    FMat c(n, m.a.dim_w, K.zero());
    for (int i = 0; i < m.a.dim_i; ++i)
        for (int w = 0; w < m.a.dim_w; ++w)
            for (int u = 0; u < du; ++u) c(i * du + u, w) = m.a.at(i, w, u);
    return c * m.d.m * c.transpose();
}

MonadData net_to_monad(const PrimeField& K, const Net& n) {
    int target = (n.geom == Geometry::V5) ? 4 * n.k + 2 : 3 * n.k + 1;
    FMat m = n.ambient(K);
    std::vector<int> piv = pivot_columns(m);
    if ((int)piv.size() != target)
        throw std::invalid_argument("net_to_monad: ambient rank " + std::to_string(piv.size()) + " != target " + std::to_string(target));
    int big = m.rows();
    FMat c(big, target);
    for (int t = 0; t < target; ++t)
        for (int r = 0; r < big; ++r) c(r, t) = m(r, piv[t]);
    FMat p = left_inverse(c, K.zero(), K.one());
    FMat g = p * m * p.transpose();
    Parity par = (n.geom == Geometry::V5) ? Parity::Skew : Parity::Symmetric;
    Duality d = make_duality(K, g, par);

    Tensor3 a = Tensor3::zero(K, n.k, target, n.dim_u);
    for (int i = 0; i < n.k; ++i)
        for (int w = 0; w < target; ++w)
            for (int u = 0; u < n.dim_u; ++u) a.at(i, w, u) = c(i * n.dim_u + u, w);

    MonadData md{geometry_tag(n.geom), n.k, K.p, std::move(a), std::move(d)};
    if (reassemble_ambient(K, md) != m) throw std::logic_error("net_to_monad: reassembly identity failed");
    return md;
}

std::optional<Net> net_from_monad(const PrimeField& K, const MonadData& m, Geometry geom, const std::vector<FMat>& b_gram) {
    if (geom != Geometry::V5 && geom != Geometry::V22) return std::nullopt;
    int du = (geom == Geometry::V5) ? 5 : 4;
    if (m.a.dim_u != du) return std::nullopt;
    FMat amb = reassemble_ambient(K, m);
    Net n = Net::zero(K, geom, m.a.dim_i);
    n.b_gram = b_gram;
    // solve each U-block against the span of the B Grams
    FMat basis(du * du, 3);
    for (int b = 0; b < 3; ++b)
        for (int u = 0; u < du; ++u)
            for (int u2 = 0; u2 < du; ++u2) basis(u * du + u2, b) = b_gram[b](u, u2);
    for (int i = 0; i < n.k; ++i)
        for (int j = i; j < n.k; ++j) {
            FMat rhs(du * du, 1);
            for (int u = 0; u < du; ++u)
                for (int u2 = 0; u2 < du; ++u2) rhs(u * du + u2, 0) = amb(i * du + u, j * du + u2);
            auto sol = solve(basis, rhs, K.zero());
            if (!sol) return std::nullopt; // block outside span(B): structural failure
            for (int b = 0; b < 3; ++b) n.set_coeff(i, j, b, (*sol)(b, 0));
        }
    if (n.ambient(K) != amb) return std::nullopt; // catches asymmetric blocks
    return n;
}

// ---------------------------------------------------------------------------
// Fibers.
// ---------------------------------------------------------------------------

MonadFibers monad_fibers_quadric(const PrimeField& K, const MonadData& m, const SpinSplit& spin, const QuadricPoint& pt) {
    FMat e = quadric_fiber(spin, pt); // 2 x 4
    int di = m.a.dim_i, dw = m.a.dim_w;
    FMat a_x(di, 2 * dw, K.zero());
    FMat dat_x(2 * dw, di, K.zero());
    for (int i = 0; i < di; ++i) {
        FMat f = m.a.slices[i] * e.transpose(); // dimW x 2, f(w, s) = omega(a_i^w, p_s)
        for (int w = 0; w < dw; ++w)
            for (int s = 0; s < 2; ++s) a_x(i, 2 * w + s) = f(w, s);
    }
    for (int j = 0; j < di; ++j) {
        FMat g = (m.d.m * m.a.slices[j]) * e.transpose(); // dimW x 2
        for (int w = 0; w < dw; ++w) {
            // section u of S(1) acts on the fiber as v |-> omega(u,p1) p2 - omega(u,p2) p1
            dat_x(2 * w + 0, j) = -g(w, 1);
            dat_x(2 * w + 1, j) = g(w, 0);
        }
    }
    return {a_x, dat_x};
}

MonadFibers monad_fibers_v5(const PrimeField& K, const MonadData& m, const V5Point& pt) {
    FMat e = v5_fiber(pt); // 2 x 5
    int di = m.a.dim_i, dw = m.a.dim_w;
    FMat a_x(2 * di, dw, K.zero());
    FMat dat_x(dw, 2 * di, K.zero());
    for (int i = 0; i < di; ++i) {
        FMat f = m.a.slices[i] * e.transpose(); // dimW x 2
        for (int w = 0; w < dw; ++w)
            for (int s = 0; s < 2; ++s) a_x(2 * i + s, w) = f(w, s);
    }
    for (int j = 0; j < di; ++j) {
        FMat g = (m.d.m * m.a.slices[j]) * e.transpose();
        for (int w = 0; w < dw; ++w)
            for (int s = 0; s < 2; ++s) dat_x(w, 2 * j + s) = g(w, s);
    }
    return {a_x, dat_x};
}

MonadFibers monad_fibers_v22(const PrimeField& K, const MonadData& m, const CubicPoint& pt) {
    int di = m.a.dim_i, dw = m.a.dim_w;
    // phi[u] = J^-1 psi[u]^t models the dual twist through the skew form on E
    std::vector<FMat> phi;
    FMat jinv = zeros(K, 2, 2);
    jinv(0, 1) = K.one();
    jinv(1, 0) = -K.one();
    for (int u = 0; u < 4; ++u) phi.push_back(jinv * pt.psi[u].transpose()); // 2 x 3

    FMat a_x(3 * di, 2 * dw, K.zero());
    FMat dat_x(2 * dw, 3 * di, K.zero());
    for (int i = 0; i < di; ++i)
        for (int w = 0; w < dw; ++w)
            for (int u = 0; u < 4; ++u) {
                Fp c = m.a.at(i, w, u);
                if (c.is_zero()) continue;
                for (int t = 0; t < 3; ++t)
                    for (int s = 0; s < 2; ++s) a_x(3 * i + t, 2 * w + s) += c * pt.psi[u](t, s);
            }
    FMat dm = m.d.m;
    for (int j = 0; j < di; ++j) {
        FMat b = dm * m.a.slices[j]; // dimW x 4
        for (int w = 0; w < dw; ++w)
            for (int u = 0; u < 4; ++u) {
                Fp c = b(w, u);
                if (c.is_zero()) continue;
                for (int s = 0; s < 2; ++s)
                    for (int t = 0; t < 3; ++t) dat_x(2 * w + s, 3 * j + t) += c * phi[u](s, t);
            }
    }
    return {a_x, dat_x};
}

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

namespace {

bool check_fibers(const MonadFibers& fib, int expected_cohomology, std::string& reason) {
    int target_rows = fib.a_x.rows();
    int source_cols = fib.dat_x.cols();
    if (!(fib.a_x * fib.dat_x).is_zero()) {
        reason = "fiber composite A_x (D A^t)_x nonzero";
        return false;
    }
    int ra = rank(fib.a_x);
    if (ra != target_rows) {
        reason = "A not surjective at the sampled point";
        return false;
    }
    int rd = rank(fib.dat_x);
    if (rd != source_cols) {
        reason = "D A^t not injective at the sampled point";
        return false;
    }
    int coh = (fib.a_x.cols() - ra) - rd;
    if (coh != expected_cohomology) {
        reason = "fiber cohomology rank " + std::to_string(coh) + " != " + std::to_string(expected_cohomology);
        return false;
    }
    return true;
}

} // namespace

ValidationReport validate_monad(const MonadData& m, const QuadricModel& model, int npoints, Rng& rng) {
    const PrimeField& K = model.K;
    ValidationReport rep;
    rep.geom = Geometry::Quadric;
    rep.k = m.k;
    rep.structural_zero = true;
    for (const Fp& v : project_condition(K, m.a, m.d, model.spin))
        if (!v.is_zero()) rep.structural_zero = false;
    rep.all_fibers_ok = true;
    for (int n = 0; n < npoints; ++n) {
        QuadricPoint pt = sample_point_quadric(model, rng);
        MonadFibers fib = monad_fibers_quadric(K, m, model.spin, pt);
        std::string reason;
        ++rep.points_checked;
        ++rep.distinct_points;
        if (!check_fibers(fib, rep.expected_cohomology, reason)) {
            rep.all_fibers_ok = false;
            rep.first_failure = n;
            rep.failure_reason = reason;
            break;
        }
    }
    return rep;
}

ValidationReport validate_monad(const MonadData& m, const V5Model& model, int npoints, Rng& rng) {
    const PrimeField& K = model.K;
    ValidationReport rep;
    rep.geom = Geometry::V5;
    rep.k = m.k;
    rep.structural_zero = net_from_monad(K, m, Geometry::V5, model.b_gram).has_value();
    rep.all_fibers_ok = true;
    for (int n = 0; n < npoints; ++n) {
        V5Point pt = sample_point_v5(model, rng);
        MonadFibers fib = monad_fibers_v5(K, m, pt);
        std::string reason;
        ++rep.points_checked;
        ++rep.distinct_points;
        if (!check_fibers(fib, rep.expected_cohomology, reason)) {
            rep.all_fibers_ok = false;
            rep.first_failure = n;
            rep.failure_reason = reason;
            break;
        }
    }
    return rep;
}

ValidationReport validate_monad(const MonadData& m, const V22Model& model, int npoints, Rng& rng) {
    const PrimeField& K = model.K;
    ValidationReport rep;
    rep.geom = Geometry::V22;
    rep.k = m.k;
    rep.best_effort = true; // point supply is limited to the seeded cubics
    rep.structural_zero = net_from_monad(K, m, Geometry::V22, model.bstar_gram).has_value();
    rep.all_fibers_ok = true;
    if (model.seeded.empty()) {
        rep.failure_reason = "model carries no seeded points";
        rep.all_fibers_ok = false;
        return rep;
    }
    rep.distinct_points = (int)model.seeded.size();
    for (int n = 0; n < npoints; ++n) {
        const CubicPoint& pt = model.seeded[n % model.seeded.size()];
        (void)rng;
        MonadFibers fib = monad_fibers_v22(K, m, pt);
        std::string reason;
        ++rep.points_checked;
        if (!check_fibers(fib, rep.expected_cohomology, reason)) {
            rep.all_fibers_ok = false;
            rep.first_failure = n;
            rep.failure_reason = reason;
            break;
        }
    }
    return rep;
}

DDCrossCheck dd_surjectivity_cross_check(const PrimeField& K, const MonadData& m, const QuadricModel& model, int npoints, Rng& rng) {
    bool dd_zero = dd_invariant(K, m.a, m.d, model.spin).is_zero();
    for (int n = 0; n < npoints; ++n) {
        QuadricPoint pt = sample_point_quadric(model, rng);
        MonadFibers fib = monad_fibers_quadric(K, m, model.spin, pt);
        if (rank(fib.a_x) != m.a.dim_i)
            return dd_zero ? DDCrossCheck::ZeroWitnessFound : DDCrossCheck::NonzeroFailureFound;
    }
    return dd_zero ? DDCrossCheck::ZeroInconclusive : DDCrossCheck::NonzeroAllPass;
}

// ---------------------------------------------------------------------------
// Group action.
// ---------------------------------------------------------------------------

MonadData group_act(const PrimeField& K, const MonadData& m, const FMat& xi, const FMat& eta) {
    if (!(eta.transpose() * m.d.m * eta == m.d.m))
        throw std::invalid_argument("group_act: eta does not preserve the duality");
    auto xi_inv = inverse(xi, K.zero(), K.one());
    if (!xi_inv) throw std::invalid_argument("group_act: xi is singular");
    MonadData out = m;
    for (int i = 0; i < m.a.dim_i; ++i) {
        FMat s(m.a.dim_w, m.a.dim_u, K.zero());
        for (int i2 = 0; i2 < m.a.dim_i; ++i2) s = s + (*xi_inv)(i, i2) * (eta * m.a.slices[i2]);
        out.a.slices[i] = s;
    }
    return out;
}

std::vector<FMat> duality_lie_algebra(const PrimeField& K, const Duality& d) {
    int n = d.m.rows();
    FMat cond(n * n, n * n, K.zero());
    // (eta^t D + D eta)[a][b]: coefficient of eta[c][e]
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    Fp coef = K.zero();
                    if (e == a) coef += d.m(c, b); // eta^t D
                    if (e == b) coef += d.m(a, c); // D eta
                    cond(a * n + b, c * n + e) = coef;
                }
    FMat ker = kernel_basis(cond);
    std::vector<FMat> basis;
    for (int t = 0; t < ker.cols(); ++t) {
        FMat eta(n, n);
        for (int c = 0; c < n; ++c)
            for (int e = 0; e < n; ++e) eta(c, e) = ker(c * n + e, t);
        basis.push_back(eta);
    }
    return basis;
}

FMat random_group_eta(const PrimeField& K, const Duality& d, Rng& rng) {
    int n = d.m.rows();
    std::vector<FMat> lie = duality_lie_algebra(K, d);
    for (int tries = 0; tries < 100; ++tries) {
        FMat s = zeros(K, n, n);
        for (const FMat& b : lie) s = s + K.random(rng) * b;
        auto inv_ips = inverse(eye(K, n) + s, K.zero(), K.one());
        if (!inv_ips) continue;
        FMat eta = (eye(K, n) - s) * *inv_ips;
        if (!(eta.transpose() * d.m * eta == d.m)) throw std::logic_error("random_group_eta: Cayley transform left the group");
        return eta;
    }
    throw std::runtime_error("random_group_eta: exhausted retries");
}

// ---------------------------------------------------------------------------
// Tangent / orbit dimensions.
// ---------------------------------------------------------------------------

DimPair monad_dimensions_quadric(const PrimeField& K, const MonadData& m, const SpinSplit& spin) {
    int di = m.a.dim_i, dw = m.a.dim_w, du = 4;
    int nvars = di * dw * du;                 // 4k(k-1)
    int ncond = 5 * di * (di - 1) / 2;        // 5 C(k-1, 2)

    std::vector<Fp> f0 = project_condition(K, m.a, m.d, spin);
    FMat jac(ncond, nvars, K.zero());
    int col = 0;
    for (int i = 0; i < di; ++i)
        for (int w = 0; w < dw; ++w)
            for (int u = 0; u < du; ++u, ++col) {
                Tensor3 a2 = m.a;
                a2.at(i, w, u) += K.one();
                std::vector<Fp> f1 = project_condition(K, a2, m.d, spin);
                // the condition map is quadratic with no linear part, and a
                // one-entry direction pairs to zero with itself, so the
                // directional derivative is the plain difference
                for (int r = 0; r < ncond; ++r) jac(r, col) = f1[r] - f0[r];
            }
    int rj = rank(jac);
    long tangent = nvars - rj;

    // infinitesimal action gl(I) (+) so(W, D): (xi, eta) |-> -xi A + A eta^t
    std::vector<FMat> lie = duality_lie_algebra(K, m.d);
    int ngen = di * di + (int)lie.size();
    FMat act(nvars, ngen, K.zero());
    int gcol = 0;
    for (int a = 0; a < di; ++a)
        for (int b = 0; b < di; ++b, ++gcol) {
            // xi = unit(a, b): (xi A)_i = delta_{i,a} slice_b
            for (int w = 0; w < dw; ++w)
                for (int u = 0; u < du; ++u) act((a * dw + w) * du + u, gcol) = -m.a.at(b, w, u);
        }
    for (const FMat& eta : lie) {
        for (int i = 0; i < di; ++i) {
            FMat s = eta * m.a.slices[i];
            for (int w = 0; w < dw; ++w)
                for (int u = 0; u < du; ++u) act((i * dw + w) * du + u, gcol) = s(w, u);
        }
        ++gcol;
    }
    int ro = rank(act);

    DimPair out;
    out.tangent = tangent;
    out.orbit = ro;
    out.certified = (rj == ncond) && (ro == ngen);
    return out;
}

DimPair net_dimensions(const PrimeField& K, const Net& n) {
    int k = n.k;
    int ncoef = 3 * k * (k + 1) / 2;
    FMat amb = n.ambient(K);
    FMat ker = kernel_basis(amb);
    int d = ker.cols();

    // tangent: nets v with ker^t ambient(v) ker = 0
    FMat cond(d * d, ncoef, K.zero());
    int col = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            for (int b = 0; b < 3; ++b, ++col) {
                Net unit = Net::zero(K, n.geom, k);
                unit.b_gram = n.b_gram;
                unit.set_coeff(i, j, b, K.one());
                FMat r = ker.transpose() * unit.ambient(K) * ker;
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) cond(x * d + y, col) = r(x, y);
            }
    int rc = (d == 0) ? 0 : rank(cond);
    long expected_rc = (n.geom == Geometry::V5) ? (long)d * (d - 1) / 2 : (long)d * (d + 1) / 2;
    long tangent = ncoef - rc;

    // orbit: xi |-> xi . alpha + alpha . xi^t, blockwise over the B-coordinates
    FMat act(ncoef, k * k, K.zero());
    int gcol = 0;
    for (int a = 0; a < k; ++a)
        for (int bb = 0; bb < k; ++bb, ++gcol) {
            // delta c[i][j] = delta_{i,a} c[bb][j] + delta_{j,a} c[i][bb]
            int row = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j)
                    for (int b = 0; b < 3; ++b, ++row) {
                        Fp v = K.zero();
                        if (i == a) v += n.c[bb][j][b];
                        if (j == a) v += n.c[i][bb][b];
                        act(row, gcol) = v;
                    }
        }
    int ro = rank(act);

    DimPair out;
    out.tangent = tangent;
    out.orbit = ro;
    out.certified = (rc == expected_rc) && (ro == k * k);
    return out;
}

// ---------------------------------------------------------------------------
// The delta table.
// ---------------------------------------------------------------------------

namespace {

DeltaTrial run_delta_trial(Geometry g, int k, const PrimeField& K, std::uint64_t seed, int index) {
    Rng rng = Rng::for_trial(seed, (std::uint64_t)index);
    DeltaTrial trial;
    trial.index = index;
    std::optional<SpinSplit> spin;
    if (g == Geometry::Quadric) spin = build_spin_split(K);
    std::optional<V5Model> v5;
    std::optional<V22Model> v22;
    if (g == Geometry::V5) v5 = build_v5_model(K, rng);
    if (g == Geometry::V22) v22 = build_v22_model(K, rng);
    for (int attempt = 0; attempt < 8; ++attempt) {
        DimPair dims;
        if (g == Geometry::Quadric) {
            MonadData m = sample_quadric_monad(k, K, *spin, rng);
            dims = monad_dimensions_quadric(K, m, *spin);
        } else if (g == Geometry::V5) {
            Net n = sample_v5_net(k, *v5, rng);
            dims = net_dimensions(K, n);
        } else {
            Net n = sample_v22_net(k, *v22, rng);
            dims = net_dimensions(K, n);
        }
        trial.resamples = attempt;
        trial.tangent = dims.tangent;
        trial.orbit = dims.orbit;
        trial.delta = dims.delta();
        trial.certified = dims.certified;
        if (trial.certified) break;
    }
    return trial;
}

} // namespace

DeltaReport delta_check(Geometry g, int k, int trials, const PrimeField& K, std::uint64_t seed) {
    if (k < min_sample_k(g) || k > max_sample_k(g))
        throw std::invalid_argument("delta_check: k = " + std::to_string(k) + " outside the supported range [" +
                                    std::to_string(min_sample_k(g)) + ", " + std::to_string(max_sample_k(g)) + "] for " + geometry_name(g));
    DeltaReport rep;
    rep.geom = g;
    rep.k = k;
    rep.prime = K.p;
    rep.seed = seed;
    rep.expected = expected_delta(g, k);

    std::vector<std::future<DeltaTrial>> futs;
    futs.reserve(trials);
    for (int t = 0; t < trials; ++t)
        futs.push_back(std::async(std::launch::async, run_delta_trial, g, k, K, seed, t));
    for (auto& f : futs) rep.trials.push_back(f.get());

    rep.certified_trials = 0;
    rep.all_certified_match = true;
    for (const DeltaTrial& t : rep.trials) {
        if (t.certified) {
            ++rep.certified_trials;
            if (t.delta != rep.expected) rep.all_certified_match = false;
        }
    }
    if (rep.certified_trials == 0) rep.all_certified_match = false;
    return rep;
}

} // namespace fano
