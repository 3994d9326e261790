#include "fano/serialize.hpp"

#include <stdexcept>

namespace fano {

Json mat_to_json(const FMat& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(m(i, c).v);
    j["entries"] = entries;
    return j;
}

FMat mat_from_json(const Json& j, const PrimeField& K) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const Json& e = j.at("entries");
    if ((int)e.size() != rows * cols) throw std::invalid_argument("mat_from_json: entry count mismatch");
    FMat m(rows, cols, K.zero());
    int t = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            std::uint64_t v = e[t++].get<std::uint64_t>();
            if (v >= K.p) throw std::invalid_argument("mat_from_json: entry not reduced mod p");
            m(i, c) = Fp{v, K.p};
        }
    return m;
}

namespace {

Json gram_list_to_json(const std::vector<FMat>& grams) {
    Json a = Json::array();
    for (const FMat& g : grams) a.push_back(mat_to_json(g));
    return a;
}

std::vector<FMat> gram_list_from_json(const Json& j, const PrimeField& K) {
    std::vector<FMat> out;
    for (const Json& g : j) out.push_back(mat_from_json(g, K));
    return out;
}

} // namespace

Json quadric_model_to_json(const QuadricModel& m, std::uint64_t seed) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = "quadric";
    j["prime"] = m.K.p;
    j["seed"] = seed;
    j["B_gram_matrices"] = Json::array();
    j["seeded_points"] = Json::array();
    return j;
}

Json v5_model_to_json(const V5Model& m, std::uint64_t seed) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = "v5";
    j["prime"] = m.K.p;
    j["seed"] = seed;
    j["B_gram_matrices"] = gram_list_to_json(m.b_gram);
    j["seeded_points"] = Json::array();
    return j;
}

Json v22_model_to_json(const V22Model& m) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = "v22";
    j["prime"] = m.K.p;
    j["seed"] = m.seed;
    j["B_gram_matrices"] = gram_list_to_json(m.bstar_gram);
    Json pts = Json::array();
    for (const CubicPoint& pt : m.seeded) {
        Json p;
        p["g"] = mat_to_json(pt.g);
        p["ideal"] = gram_list_to_json(pt.ideal);
        pts.push_back(p);
    }
    j["seeded_points"] = pts;
    return j;
}

V5Model v5_model_from_json(const Json& j) {
    if (j.at("geometry").get<std::string>() != "v5") throw std::invalid_argument("v5_model_from_json: wrong geometry");
    PrimeField K(j.at("prime").get<std::uint64_t>());
    V5Model m{K, gram_list_from_json(j.at("B_gram_matrices"), K)};
    if (m.b_gram.size() != 3) throw std::invalid_argument("v5_model_from_json: expected 3 Gram matrices");
    return m;
}

V22Model v22_model_from_json(const Json& j) {
    if (j.at("geometry").get<std::string>() != "v22") throw std::invalid_argument("v22_model_from_json: wrong geometry");
    PrimeField K(j.at("prime").get<std::uint64_t>());
    V22Model m{K, gram_list_from_json(j.at("B_gram_matrices"), K), {}, {}, j.at("seed").get<std::uint64_t>()};
    if (m.bstar_gram.size() != 3) throw std::invalid_argument("v22_model_from_json: expected 3 Gram matrices");
    // V and the syzygy data are recomputed (deterministic given the stored ideals)
    FMat v_cond(3, 10);
    for (int r = 0; r < 3; ++r) {
        int c = 0;
        for (int i = 0; i < 4; ++i)
            for (int j2 = i; j2 < 4; ++j2) {
                Fp coef = m.bstar_gram[r](i, j2);
                if (i != j2) coef += m.bstar_gram[r](j2, i);
                v_cond(r, c++) = coef;
            }
    }
    FMat v_basis = kernel_basis(v_cond);
    for (int c = 0; c < v_basis.cols(); ++c) m.v_ann.push_back(gram_from_coords(K, v_basis.col(c)));
    for (const Json& p : j.at("seeded_points")) {
        CubicPoint pt;
        pt.g = mat_from_json(p.at("g"), K);
        pt.ideal = gram_list_from_json(p.at("ideal"), K);
        pt.psi = syzygy_psi(K, pt.ideal);
        m.seeded.push_back(std::move(pt));
    }
    return m;
}

Json monad_to_json(const MonadData& m) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = geometry_name(m.tag.kind);
    j["k"] = m.k;
    j["prime"] = m.prime;
    j["dimI"] = m.a.dim_i;
    j["dimW"] = m.a.dim_w;
    j["dimU"] = m.a.dim_u;
    Json d = Json::array();
    for (int i = 0; i < m.d.m.rows(); ++i)
        for (int c = 0; c < m.d.m.cols(); ++c) d.push_back(m.d.m(i, c).v);
    j["D"] = d;
    Json a = Json::array();
    for (int i = 0; i < m.a.dim_i; ++i) {
        Json slice = Json::array();
        for (int w = 0; w < m.a.dim_w; ++w) {
            Json row = Json::array();
            for (int u = 0; u < m.a.dim_u; ++u) row.push_back(m.a.at(i, w, u).v);
            slice.push_back(row);
        }
        a.push_back(slice);
    }
    j["A"] = a;
    return j;
}

MonadData monad_from_json(const Json& j) {
    Geometry g = geometry_from_name(j.at("geometry").get<std::string>());
    PrimeField K(j.at("prime").get<std::uint64_t>());
    int k = j.at("k").get<int>();
    MonadDims dims = monad_dims(g, k);
    if (j.at("dimI").get<int>() != dims.dim_i || j.at("dimW").get<int>() != dims.dim_w || j.at("dimU").get<int>() != dims.dim_u)
        throw std::invalid_argument("monad_from_json: dimensions disagree with the dimension table");
    const Json& d = j.at("D");
    if ((int)d.size() != dims.dim_w * dims.dim_w) throw std::invalid_argument("monad_from_json: bad duality size");
    FMat dm(dims.dim_w, dims.dim_w, K.zero());
    int t = 0;
    for (int i = 0; i < dims.dim_w; ++i)
        for (int c = 0; c < dims.dim_w; ++c) dm(i, c) = K((long long)d[t++].get<std::uint64_t>());
    Tensor3 a = Tensor3::zero(K, dims.dim_i, dims.dim_w, dims.dim_u);
    const Json& ja = j.at("A");
    if ((int)ja.size() != dims.dim_i) throw std::invalid_argument("monad_from_json: bad A shape");
    for (int i = 0; i < dims.dim_i; ++i) {
        if ((int)ja[i].size() != dims.dim_w) throw std::invalid_argument("monad_from_json: bad A shape");
        for (int w = 0; w < dims.dim_w; ++w) {
            if ((int)ja[i][w].size() != dims.dim_u) throw std::invalid_argument("monad_from_json: bad A shape");
            for (int u = 0; u < dims.dim_u; ++u) a.at(i, w, u) = K((long long)ja[i][w][u].get<std::uint64_t>());
        }
    }
    Parity par = dims.symmetric_duality ? Parity::Symmetric : Parity::Skew;
    return {geometry_tag(g), k, K.p, std::move(a), make_duality(K, std::move(dm), par)};
}

Json net_to_json(const Net& n, std::uint64_t prime) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = geometry_name(n.geom);
    j["k"] = n.k;
    j["prime"] = prime;
    j["B_gram"] = gram_list_to_json(n.b_gram);
    Json c = Json::array();
    for (int i = 0; i < n.k; ++i) {
        Json row = Json::array();
        for (int jj = 0; jj < n.k; ++jj) {
            Json cell = Json::array();
            for (int b = 0; b < 3; ++b) cell.push_back(n.c[i][jj][b].v);
            row.push_back(cell);
        }
        c.push_back(row);
    }
    j["coefficients"] = c;
    return j;
}

Net net_from_json(const Json& j) {
    Geometry g = geometry_from_name(j.at("geometry").get<std::string>());
    PrimeField K(j.at("prime").get<std::uint64_t>());
    int k = j.at("k").get<int>();
    Net n = Net::zero(K, g, k);
    n.b_gram = gram_list_from_json(j.at("B_gram"), K);
    if (n.b_gram.size() != 3) throw std::invalid_argument("net_from_json: expected 3 Gram matrices");
    const Json& c = j.at("coefficients");
    if ((int)c.size() != k) throw std::invalid_argument("net_from_json: bad coefficient shape");
    for (int i = 0; i < k; ++i)
        for (int jj = 0; jj < k; ++jj)
            for (int b = 0; b < 3; ++b) n.c[i][jj][b] = K((long long)c[i][jj][b].get<std::uint64_t>());
    for (int i = 0; i < k; ++i)
        for (int jj = 0; jj < k; ++jj)
            for (int b = 0; b < 3; ++b)
                if (!(n.c[i][jj][b] == n.c[jj][i][b])) throw std::invalid_argument("net_from_json: coefficients not symmetric");
    for (const FMat& gram : n.b_gram) {
        if (gram.rows() != n.dim_u || gram.cols() != n.dim_u) throw std::invalid_argument("net_from_json: Gram size mismatch");
        for (int u = 0; u < n.dim_u; ++u)
            for (int u2 = u; u2 < n.dim_u; ++u2) {
                bool ok = (g == Geometry::V5) ? (gram(u, u2) == -gram(u2, u)) : (gram(u, u2) == gram(u2, u));
                if (!ok) throw std::invalid_argument("net_from_json: Gram parity violated for " + geometry_name(g));
            }
    }
    return n;
}

Json curve_to_json(const FPoly& p) {
    Json j;
    j["nvars"] = p.nvars();
    j["degree"] = p.total_degree();
    Json terms = Json::array();
    // descending graded-lex: iterate the canonical map backwards
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        Json term = Json::array();
        term.push_back(it->first);
        term.push_back(it->second.v);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

FPoly curve_from_json(const Json& j, const PrimeField& K) {
    FPoly p(j.at("nvars").get<int>());
    for (const Json& term : j.at("terms")) {
        std::vector<int> e = term[0].get<std::vector<int>>();
        p.add_term(e, K((long long)term[1].get<std::uint64_t>()));
    }
    return p;
}

Json validation_to_json(const ValidationReport& r) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = geometry_name(r.geom);
    j["k"] = r.k;
    j["structural_zero"] = r.structural_zero;
    j["points_checked"] = r.points_checked;
    j["distinct_points"] = r.distinct_points;
    j["best_effort"] = r.best_effort;
    j["expected_cohomology"] = r.expected_cohomology;
    j["all_fibers_ok"] = r.all_fibers_ok;
    j["passed"] = r.passed();
    if (r.first_failure >= 0) {
        j["first_failure"] = r.first_failure;
        j["failure_reason"] = r.failure_reason;
    }
    return j;
}

Json delta_to_json(const DeltaReport& r) {
    Json j;
    j["format"] = kFormatVersion;
    j["geometry"] = geometry_name(r.geom);
    j["k"] = r.k;
    j["prime"] = r.prime;
    j["seed"] = r.seed;
    j["expected_delta"] = r.expected;
    Json trials = Json::array();
    for (const DeltaTrial& t : r.trials) {
        Json tj;
        tj["trial"] = t.index;
        tj["certified"] = t.certified;
        tj["tangent_dim"] = t.tangent;
        tj["orbit_dim"] = t.orbit;
        tj["delta"] = t.delta;
        tj["resamples"] = t.resamples;
        trials.push_back(tj);
    }
    j["trials"] = trials;
    j["certified_trials"] = r.certified_trials;
    j["all_certified_match"] = r.all_certified_match;
    return j;
}

Json witness_to_json(const SemistabilityWitness& w) {
    Json j;
    j["format"] = kFormatVersion;
    j["verdict"] = w.semistable ? "semistable" : "unstable";
    if (!w.semistable) {
        j["I1"] = mat_to_json(w.i1);
        j["I2"] = mat_to_json(w.i2);
    }
    return j;
}

} // namespace fano
