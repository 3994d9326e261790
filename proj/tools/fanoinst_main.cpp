#include <CLI11.hpp>

#include "fano/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-field models of instanton-bundle moduli on the quadric threefold, V5 and V22: monads, nets of quadrics, hyperdeterminants, jumping loci and dimension checks."};
    app.require_subcommand(1);

    fano::cli::RunConfig cfg;
    std::string geometry = "quadric";

    auto add_common = [&](CLI::App* sub, bool with_geometry, bool with_k) {
        if (with_geometry) sub->add_option("--geometry", geometry, "quadric, v5 or v22")->check(CLI::IsMember({"quadric", "v5", "v22"}));
        if (with_k) sub->add_option("--k", cfg.k, "net / monad parameter");
        sub->add_option("--prime", cfg.prime, "odd working prime (< 2^62)");
        sub->add_option("--seed", cfg.seed, "random seed; output is deterministic per (command, geometry, k, prime, seed)");
        sub->add_option("--output", cfg.output, "output file (default: stdout)");
    };

    CLI::App* sample = app.add_subcommand("sample", "sample a monad (quadric) or a net (v5, v22) and emit it as JSON");
    add_common(sample, true, true);
    sample->add_option("--extra-point-search", cfg.extra_search, "v22 only: best-effort random search for more annihilating cubics (candidate count)");

    CLI::App* validate = app.add_subcommand("validate", "validate a sampled monad/net file fiberwise");
    add_common(validate, false, false);
    validate->add_option("--input", cfg.input, "file produced by sample")->required();
    validate->add_option("--npoints", cfg.npoints, "number of fiber checks");

    CLI::App* dd = app.add_subcommand("dd", "hyperdeterminant of a quadric monad (sampled or from --input)");
    add_common(dd, false, true);
    dd->add_option("--input", cfg.input, "monad file");
    int dd_npoints = 0; // dd cross-checks fibers only when requested
    dd->add_option("--npoints", dd_npoints, "also cross-check fiber surjectivity at this many sampled points");

    CLI::App* delta = app.add_subcommand("delta", "tangent/orbit dimension trials against the expected moduli dimension");
    add_common(delta, true, true);
    delta->add_option("--trials", cfg.trials, "number of independent trials");

    CLI::App* jumping = app.add_subcommand("jumping", "jumping-lines data (quadric) or jumping-conics curve (v22)");
    add_common(jumping, true, true);
    jumping->add_option("--input", cfg.input, "monad or net file");

    CLI::App* apolar = app.add_subcommand("apolar", "apolar quartic of a sampled v22 model");
    add_common(apolar, false, false);

    CLI::App* semistable = app.add_subcommand("semistable", "Wall semistability of a sampled v22 net over F_3, by full enumeration");
    add_common(semistable, false, true);

    CLI::App* pencil = app.add_subcommand("pencil", "branch sextic and smoothness of a pencil of quadrics in P^5");
    add_common(pencil, false, false);
    pencil->add_flag("--diagonal", cfg.diagonal, "use the diagonal test pencil instead of a random one");

    CLI::App* chi = app.add_subcommand("chi", "check the monad Euler characteristic against the closed-form Hilbert polynomial");
    add_common(chi, true, true);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.geometry = fano::geometry_from_name(geometry);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    for (CLI::App* sub : {sample, validate, dd, delta, jumping, apolar, semistable, pencil, chi})
        if (sub->parsed()) cfg.command = sub->get_name();
    if (dd->parsed()) cfg.npoints = dd_npoints;

    return fano::cli::run(cfg);
}
