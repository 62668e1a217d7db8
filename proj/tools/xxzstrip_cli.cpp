// xxzstrip_cli.cpp - command line front end for the experiment drivers
//
// exit codes: 0 every check passed, 1 at least one bound check failed,
// 2 invalid input.
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xxzstrip/experiments.hpp"
#include "xxzstrip/version.hpp"

namespace {

using namespace xxzstrip;

std::string default_outdir() {
    const char* env = std::getenv("XXZSTRIP_OUTDIR");
    return env != nullptr && *env != '\0' ? env : "./out";
}

// shared field flags; law "none" leaves the optional empty
struct FieldFlags {
    std::string law = "none";
    double a = 1.0;
    double p = 0.5;
    double b = 1.0;
    std::vector<std::string> atoms;   // value=prob
    std::uint64_t seed = 7;

    void attach(CLI::App* cmd, const char* none_help) {
        cmd->add_option("--field", law,
                        std::string("field law: none, bernoulli, uniform, discrete; ") +
                            none_help)
            ->check(CLI::IsMember({"none", "bernoulli", "uniform", "discrete"}));
        cmd->add_option("--field-a", a, "bernoulli amplitude a > 0");
        cmd->add_option("--field-p", p, "bernoulli probability p in (0, 1]");
        cmd->add_option("--field-b", b, "uniform upper end b > 0");
        cmd->add_option("--atom", atoms,
                        "discrete atom value=prob, repeatable, probs must sum to 1");
        cmd->add_option("--field-seed", seed, "seed of the field stream");
    }

    std::optional<RandomFieldSpec> build() const {
        if (law == "none") return std::nullopt;
        if (law == "bernoulli") return bernoulli_field(a, p, seed);
        if (law == "uniform") return uniform_field(b, seed);
        std::vector<std::pair<double, double>> parsed;
        for (const std::string& atom : atoms) {
            const std::size_t eq = atom.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("atom must look like value=prob: " + atom);
            parsed.emplace_back(std::stod(atom.substr(0, eq)),
                                std::stod(atom.substr(eq + 1)));
        }
        return discrete_field(parsed, seed);
    }
};

int finish(const ExperimentResult& result, const std::string& outdir) {
    for (const std::string& path : write_experiment(result, outdir))
        std::printf("wrote %s\n", path.c_str());
    std::printf("%s: %s\n", result.id.c_str(), result.all_pass ? "all checks passed"
                                                               : "BOUND VIOLATED");
    return result.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale numerical checks for droplet bands of an anisotropic "
                 "spin strip"};
    app.set_version_flag("--version", kVersionTag);
    app.require_subcommand(1);

    std::string outdir = default_outdir();
    app.add_option("--outdir", outdir,
                   "output directory (default $XXZSTRIP_OUTDIR or ./out)");
    app.fallthrough();   // --outdir may follow the subcommand

    // spectrum
    SpectrumScanParams sp;
    FieldFlags sp_field;
    CLI::App* spectrum = app.add_subcommand("spectrum", "sector spectra and band ranks");
    spectrum->add_option("--ell", sp.half_length, "half length l, strip has 2l columns")
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--width", sp.width, "strip width M")->check(CLI::PositiveNumber);
    spectrum->add_option("--anisotropy", sp.anisotropy, "anisotropy, must be > 1");
    spectrum->add_option("--delta", sp.delta, "band shrink delta in (0, 1]");
    spectrum->add_option("--sectors", sp.sectors, "particle numbers (default: all)");
    spectrum->add_option("--potential", sp.constant_potential, "constant on-site potential");
    spectrum->add_option("--sample-index", sp.sample_index, "field sample index");
    sp_field.attach(spectrum, "default none (constant potential)");

    // bounds
    BoundSuiteParams bp;
    CLI::App* bounds = app.add_subcommand("bounds", "deterministic bound suite");
    bounds->add_option("--widths", bp.widths, "strip widths M to cover");
    bounds->add_option("--anisotropy", bp.anisotropy, "anisotropy, must be > 1");
    bounds->add_option("--delta", bp.delta, "band shrink delta in (0, 1]");
    bounds->add_option("--mu", bp.mu_grid, "decay rates mu > 0");
    bounds->add_option("--margins", bp.fsum_margins, "window margins for the f brackets");
    bounds->add_option("--window", bp.pointwise_window,
                       "columns for the exhaustive distance check");
    bounds->add_option("--seed", bp.seed, "seed for the random potentials");
    bounds->add_option("--random-potentials", bp.random_potentials,
                       "random potentials per instance");

    // ee-scaling
    EEScalingParams ep;
    CLI::App* scaling = app.add_subcommand("ee-scaling", "entanglement scaling in l");
    scaling->add_option("--width", ep.width, "strip width M")->check(CLI::PositiveNumber);
    scaling->add_option("--anisotropy", ep.anisotropy, "anisotropy, must be > 1");
    scaling->add_option("--delta", ep.delta, "band shrink delta in (0, 1]");
    scaling->add_option("--ells", ep.ells, "half lengths l to scan");
    scaling->add_option("--samples", ep.samples, "random unit vectors per band");
    scaling->add_option("--seed", ep.seed, "seed for the band sampling");
    scaling->add_option("--alphas", ep.alpha_grid, "Renyi orders in (0, 1) for the cap");

    // mc-arealaw
    MCArealawParams mp;
    FieldFlags mp_field;
    mp_field.law = "bernoulli";
    CLI::App* mc = app.add_subcommand("mc-arealaw", "disorder-averaged area law");
    mc->add_option("--width", mp.width, "strip width M")->check(CLI::PositiveNumber);
    mc->add_option("--anisotropy", mp.anisotropy, "anisotropy, must be > 1");
    mc->add_option("--delta", mp.delta, "band shrink delta in (0, 1]");
    mc->add_option("--ells", mp.ells, "half lengths l to scan");
    mc->add_option("--samples", mp.n_samples, "disorder samples per l");
    mc->add_option("--subspace-samples", mp.subspace_samples,
                   "random vectors inside each band");
    mc->add_option("--crossing-samples", mp.crossing_samples,
                   "disorder draws for the norm decay check");
    mc->add_option("--crossing-js", mp.crossing_js, "crossing set sizes to track");
    mp_field.attach(mc, "default bernoulli(1, 0.5)");

    // f-sum
    FsumScanParams fp;
    CLI::App* fsum = app.add_subcommand("f-sum", "certified configuration-sum brackets");
    fsum->add_option("--widths", fp.widths, "strip widths M to cover");
    fsum->add_option("--mu", fp.mu_grid, "decay rates mu > 0");
    fsum->add_option("--margins", fp.margins, "window margins per side");
    fsum->add_option("--enum-cap", fp.enum_cap, "largest enumeration allowed");

    try {
        app.parse(argc, argv);
        if (spectrum->parsed()) {
            sp.field = sp_field.build();
            return finish(run_spectrum_scan(sp), outdir);
        }
        if (bounds->parsed()) return finish(run_bound_suite(bp), outdir);
        if (scaling->parsed()) return finish(run_ee_scaling(ep), outdir);
        if (mc->parsed()) {
            if (auto field = mp_field.build()) mp.field = *field;
            return finish(run_mc_arealaw(mp), outdir);
        }
        if (fsum->parsed()) return finish(run_fsum_scan(fp), outdir);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
