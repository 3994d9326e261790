#include "fano/cli.hpp"

#include <fstream>
#include <iostream>

#include "fano/serialize.hpp"

namespace fano::cli {

namespace {

void check_range(Geometry g, int k) {
    if (k < min_sample_k(g) || k > max_sample_k(g))
        throw std::invalid_argument("k = " + std::to_string(k) + " unsupported for " + geometry_name(g) + "; supported range is [" +
                                    std::to_string(min_sample_k(g)) + ", " + std::to_string(max_sample_k(g)) + "]");
}

PrimeField field_of(const RunConfig& cfg) {
    if (cfg.prime % 2 == 0) throw std::invalid_argument("--prime must be an odd prime");
    return PrimeField(cfg.prime);
}

void emit(const RunConfig& cfg, const Json& j) {
    std::string text = j.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + cfg.output);
        out << text;
    }
}

Json header(const RunConfig& cfg) {
    Json j;
    j["format"] = kFormatVersion;
    j["command"] = cfg.command;
    return j;
}

Json load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw std::invalid_argument("--input is required for " + cfg.command);
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file " + cfg.input);
    Json j = Json::parse(in);
    if (j.contains("format") && j["format"].get<int>() != kFormatVersion)
        throw std::invalid_argument("unsupported format version in " + cfg.input);
    return j;
}

int cmd_sample(const RunConfig& cfg) {
    check_range(cfg.geometry, cfg.k);
    PrimeField K = field_of(cfg);
    Rng rng(cfg.seed);
    Json j = header(cfg);
    j["geometry"] = geometry_name(cfg.geometry);
    j["k"] = cfg.k;
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    switch (cfg.geometry) {
        case Geometry::Quadric: {
            QuadricModel model = build_quadric_model(K);
            MonadData m = sample_quadric_monad(cfg.k, K, model.spin, rng);
            j["monad"] = monad_to_json(m);
            j["model"] = quadric_model_to_json(model, cfg.seed);
            break;
        }
        case Geometry::V5: {
            V5Model model = build_v5_model(K, rng);
            PencilStats stats;
            Net n = sample_v5_net(cfg.k, model, rng, &stats);
            j["net"] = net_to_json(n, cfg.prime);
            j["model"] = v5_model_to_json(model, cfg.seed);
            if (cfg.k == 4) {
                Json ps;
                ps["pencils_tried"] = stats.pencils;
                ps["roots_seen"] = stats.roots_seen;
                ps["rejected_pencils"] = stats.rejected_pencils;
                j["pencil_stats"] = ps;
            }
            break;
        }
        case Geometry::V22: {
            V22Model model = build_v22_model(K, rng);
            model.seed = cfg.seed;
            PencilStats stats;
            Net n = sample_v22_net(cfg.k, model, rng, &stats);
            j["net"] = net_to_json(n, cfg.prime);
            j["model"] = v22_model_to_json(model);
            if (cfg.k == 2) {
                Json ps;
                ps["pencils_tried"] = stats.pencils;
                ps["roots_seen"] = stats.roots_seen;
                ps["rejected_pencils"] = stats.rejected_pencils;
                j["pencil_stats"] = ps;
            }
            if (cfg.extra_search > 0) {
                std::vector<CubicPoint> found = extra_point_search(model, cfg.extra_search, rng);
                Json es;
                es["candidates"] = cfg.extra_search;
                es["found"] = (int)found.size();
                es["note"] = "best-effort random search; expected empty over large fields";
                j["extra_point_search"] = es;
            }
            break;
        }
    }
    emit(cfg, j);
    return 0;
}

ValidationReport validate_from_json(const Json& in, int npoints, Rng& rng) {
    if (in.contains("monad")) {
        MonadData m = monad_from_json(in.at("monad"));
        PrimeField K(m.prime);
        QuadricModel model = build_quadric_model(K);
        return validate_monad(m, model, npoints, rng);
    }
    if (!in.contains("net")) throw std::invalid_argument("input file carries neither a monad nor a net");
    Net n = net_from_json(in.at("net"));
    PrimeField K(in.at("net").at("prime").get<std::uint64_t>());
    MonadData m = net_to_monad(K, n);
    if (n.geom == Geometry::V5) {
        V5Model model{K, n.b_gram};
        return validate_monad(m, model, npoints, rng);
    }
    if (!in.contains("model")) throw std::invalid_argument("v22 validation needs the embedded model (seeded points)");
    V22Model model = v22_model_from_json(in.at("model"));
    return validate_monad(m, model, npoints, rng);
}

int cmd_validate(const RunConfig& cfg) {
    Json in = load_input(cfg);
    Rng rng(cfg.seed);
    ValidationReport rep = validate_from_json(in, cfg.npoints, rng);
    Json j = header(cfg);
    j["report"] = validation_to_json(rep);
    emit(cfg, j);
    return rep.passed() ? 0 : 1;
}

int cmd_dd(const RunConfig& cfg) {
    MonadData m = [&] {
        if (!cfg.input.empty()) return monad_from_json(load_input(cfg).at("monad"));
        if (cfg.geometry != Geometry::Quadric) throw std::invalid_argument("dd applies to quadric monads");
        check_range(cfg.geometry, cfg.k);
        PrimeField K = field_of(cfg);
        Rng rng(cfg.seed);
        return sample_quadric_monad(cfg.k, K, build_spin_split(K), rng);
    }();
    if (m.tag.kind != Geometry::Quadric) throw std::invalid_argument("dd applies to quadric monads");
    PrimeField K(m.prime);
    QuadricModel model = build_quadric_model(K);
    Fp dd = dd_invariant(K, m.a, m.d, model.spin);
    Json j = header(cfg);
    j["geometry"] = "quadric";
    j["k"] = m.k;
    j["prime"] = m.prime;
    j["dd"] = dd.v;
    j["nonzero"] = !dd.is_zero();
    int code = 0;
    if (cfg.npoints > 0) {
        Rng prng(cfg.seed + 1);
        DDCrossCheck cc = dd_surjectivity_cross_check(K, m, model, cfg.npoints, prng);
        const char* verdict = "";
        switch (cc) {
            case DDCrossCheck::NonzeroAllPass: verdict = "nonzero: all sampled fibers surjective"; break;
            case DDCrossCheck::NonzeroFailureFound: verdict = "INCONSISTENT: nonzero DD but a fiber failure was found"; code = 1; break;
            case DDCrossCheck::ZeroWitnessFound: verdict = "zero: fiber failure witnessed"; break;
            case DDCrossCheck::ZeroInconclusive: verdict = "zero: no fiber failure found in the sample (inconclusive)"; break;
        }
        j["surjectivity_cross_check"] = verdict;
        j["cross_check_points"] = cfg.npoints;
    }
    emit(cfg, j);
    return code;
}

int cmd_delta(const RunConfig& cfg) {
    check_range(cfg.geometry, cfg.k);
    if (cfg.trials < 1) throw std::invalid_argument("--trials must be positive");
    PrimeField K = field_of(cfg);
    DeltaReport rep = delta_check(cfg.geometry, cfg.k, cfg.trials, K, cfg.seed);
    Json j = header(cfg);
    j["report"] = delta_to_json(rep);
    emit(cfg, j);
    return rep.all_certified_match ? 0 : 1;
}

int cmd_jumping(const RunConfig& cfg) {
    PrimeField K = field_of(cfg);
    Rng rng(cfg.seed);
    Json j = header(cfg);
    if (cfg.geometry == Geometry::Quadric) {
        MonadData m = cfg.input.empty()
                          ? (check_range(cfg.geometry, cfg.k), sample_quadric_monad(cfg.k, K, build_spin_split(K), rng))
                          : monad_from_json(load_input(cfg).at("monad"));
        PrimeField Km(m.prime);
        LinearFormMatrix b = jumping_lines_matrix(Km, m);
        std::vector<FPoly> minors = maximal_minors(Km, b, rng);
        // B . minors = 0 is the structural identity behind the resolution
        bool identity_ok = true;
        for (int i = 0; i < b.m.rows(); ++i) {
            FPoly acc(4);
            for (int w = 0; w < b.m.cols(); ++w) acc = acc + b.m(i, w) * minors[w];
            if (!acc.is_zero()) identity_ok = false;
        }
        bool all_zero = true;
        for (const FPoly& mm : minors)
            if (!mm.is_zero()) all_zero = false;
        j["geometry"] = "quadric";
        j["k"] = m.k;
        j["degree"] = jumping_curve_degree(m.k);
        Json ms = Json::array();
        for (const FPoly& mm : minors) ms.push_back(curve_to_json(mm));
        j["minors"] = ms;
        j["kernel_identity"] = identity_ok;
        j["generic_splitting"] = !all_zero;
        emit(cfg, j);
        return (identity_ok && !all_zero) ? 0 : 1;
    }
    if (cfg.geometry == Geometry::V22) {
        Net n = [&] {
            if (!cfg.input.empty()) return net_from_json(load_input(cfg).at("net"));
            check_range(cfg.geometry, cfg.k);
            V22Model model = build_v22_model(K, rng);
            return sample_v22_net(cfg.k, model, rng);
        }();
        PrimeField Kn(n.c[0][0][0].p ? n.c[0][0][0].p : cfg.prime);
        FPoly curve = jumping_conics_curve(Kn, n, rng);
        j["geometry"] = "v22";
        j["k"] = n.k;
        j["degree"] = curve.is_zero() ? -1 : curve.total_degree();
        j["curve"] = curve_to_json(curve);
        j["generic_splitting"] = !curve.is_zero();
        emit(cfg, j);
        return curve.is_zero() ? 1 : 0;
    }
    throw std::invalid_argument("jumping applies to quadric monads (lines) and v22 nets (conics)");
}

int cmd_apolar(const RunConfig& cfg) {
    PrimeField K = field_of(cfg);
    Rng rng(cfg.seed);
    V22Model model = build_v22_model(K, rng);
    model.seed = cfg.seed;
    FPoly q = apolar_quartic(model, rng);
    Json j = header(cfg);
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    j["quartic"] = curve_to_json(q);
    j["model"] = v22_model_to_json(model);
    emit(cfg, j);
    return 0;
}

int cmd_semistable(const RunConfig& cfg) {
    // nets are sampled over the enumeration field itself (F_3; F_2 admits no
    // Gram halving, the library-level check still accepts hand-built F_2 nets)
    if (cfg.k < 1 || cfg.k > 2)
        throw std::invalid_argument("semistable sampling supports k in {1, 2} over F_3 (the enumeration itself takes hand-built nets up to k = 3 over F_3, k = 4 over F_2)");
    PrimeField K(3);
    Rng rng(cfg.seed);
    auto [model, n] = sample_v22_model_net(cfg.k, K, rng);
    SemistabilityWitness w = wall_semistable(n);
    Json j = header(cfg);
    j["k"] = n.k;
    j["enumeration_field"] = 3;
    j["net"] = net_to_json(n, 3);
    j["witness"] = witness_to_json(w);
    if (!w.semistable) j["witness_verified"] = verify_unstable_witness(K, n, w);
    emit(cfg, j);
    return 0;
}

int cmd_pencil(const RunConfig& cfg) {
    PrimeField K = field_of(cfg);
    Rng rng(cfg.seed);
    Pencil p = [&] {
        if (cfg.diagonal) {
            FMat q1 = eye(K, 6);
            FMat q2 = zeros(K, 6, 6);
            for (int i = 0; i < 6; ++i) q2(i, i) = K(i);
            return make_pencil(K, q1, q2);
        }
        return make_pencil(K, random_symmetric(K, 6, rng), random_symmetric(K, 6, rng));
    }();
    FPoly sextic = branch_sextic(K, p, rng);
    Json j = header(cfg);
    j["prime"] = cfg.prime;
    j["seed"] = cfg.seed;
    j["sextic"] = curve_to_json(sextic);
    // coefficient list of the degree-6 binary form, ascending in lambda
    Json coeffs = Json::array();
    for (int e = 0; e <= 6; ++e) {
        std::vector<int> mono{e, 6 - e};
        coeffs.push_back((sextic.coeff(mono) + K.zero()).v);
    }
    j["coefficients"] = coeffs;
    j["smooth"] = is_smooth_pencil(K, p, rng);
    emit(cfg, j);
    return 0;
}

int cmd_chi(const RunConfig& cfg) {
    if (cfg.geometry == Geometry::V22) throw std::invalid_argument("chi: the V22 monad cross-check is not supported");
    int kmax = (cfg.geometry == Geometry::Quadric) ? 9 : 6;
    if (cfg.k < 2 || cfg.k > kmax)
        throw std::invalid_argument("chi: supported range is 2 <= k <= " + std::to_string(kmax) + " for " + geometry_name(cfg.geometry));
    HilbPoly lhs = chi_monad(cfg.geometry, cfg.k);
    HilbPoly rhs = chi_instanton(cfg.geometry, cfg.k);
    Json j = header(cfg);
    j["geometry"] = geometry_name(cfg.geometry);
    j["k"] = cfg.k;
    auto poly_json = [](const HilbPoly& p) {
        Json a = Json::array();
        for (const Rat& c : p.c) a.push_back(c.str());
        return a;
    };
    j["chi_monad"] = poly_json(lhs);
    j["chi_instanton"] = poly_json(rhs);
    j["identical"] = (lhs == rhs);
    emit(cfg, j);
    return (lhs == rhs) ? 0 : 1;
}

} // namespace

int run(const RunConfig& cfg) {
    try {
        if (cfg.command == "sample") return cmd_sample(cfg);
        if (cfg.command == "validate") return cmd_validate(cfg);
        if (cfg.command == "dd") return cmd_dd(cfg);
        if (cfg.command == "delta") return cmd_delta(cfg);
        if (cfg.command == "jumping") return cmd_jumping(cfg);
        if (cfg.command == "apolar") return cmd_apolar(cfg);
        if (cfg.command == "semistable") return cmd_semistable(cfg);
        if (cfg.command == "pencil") return cmd_pencil(cfg);
        if (cfg.command == "chi") return cmd_chi(cfg);
        std::cerr << "unknown command: " << cfg.command << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fano::cli
