// experiments.cpp
#include "xxzstrip/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "xxzstrip/entanglement.hpp"
#include "xxzstrip/levels.hpp"
#include "xxzstrip/rng.hpp"
#include "xxzstrip/version.hpp"

namespace xxzstrip {

namespace {

constexpr const char* kPass = "pass";
constexpr const char* kFail = "fail";
constexpr const char* kSkip = "skip";

std::string label(const char* fmt, ...) {
    char buf[200];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

std::vector<int> admissible_sectors(int half_length, int width) {
    std::vector<int> out;
    for (int k = width; k <= 2 * half_length; ++k) out.push_back(k * width);
    return out;
}

nlohmann::json field_json(const RandomFieldSpec& field) {
    return {{"law", describe(field)}, {"seed", field.seed}};
}

class WallClock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// margin-padded window of `total` columns containing the rectangle
ColumnWindow centered_window(const RectangleSpec& rect, int total) {
    const int extra = std::max(total - rect.depth, 0);
    const int left = extra / 2;
    return {rect.start_column - left, rect.end_column() + (extra - left)};
}

}  // namespace

std::vector<std::string> write_experiment(const ExperimentResult& result,
                                          const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(outdir);
    std::vector<std::string> written;
    nlohmann::json tables = nlohmann::json::object();
    for (const auto& [name, table] : result.tables) {
        const std::string file = result.id + "_" + name + ".csv";
        const std::string path = (fs::path(outdir) / file).string();
        write_text_file(path, table.to_csv());
        written.push_back(path);
        tables[name] = file;
    }
    nlohmann::json manifest = {
        {"experiment", result.id},       {"version", kVersionTag},
        {"params", result.params},       {"tables", tables},
        {"all_pass", result.all_pass},   {"walltime_seconds", result.wall_seconds},
    };
    const std::string mpath = (fs::path(outdir) / (result.id + "_manifest.json")).string();
    write_text_file(mpath, manifest.dump(2) + "\n");
    written.push_back(mpath);
    return written;
}

// ------------------------------------------------------------------
// spectrum scan
// ------------------------------------------------------------------

ExperimentResult run_spectrum_scan(const SpectrumScanParams& params) {
    WallClock clock;
    const StripGeometry geom = build_strip(params.half_length, params.width);
    if (params.field) validate_field(*params.field);
    if (params.constant_potential < 0.0)
        throw std::invalid_argument("constant potential must be >= 0");
    const SitePotential v =
        params.field ? sample_field(*params.field, geom, params.sample_index)
                     : SitePotential::constant(geom, params.constant_potential);

    std::vector<int> sectors = params.sectors;
    if (sectors.empty()) {
        for (int n = 0; n <= geom.num_vertices(); ++n)
            if (binomial(geom.num_vertices(), n) <= params.sector_cap) sectors.push_back(n);
    }

    ExperimentResult result;
    result.id = "spectrum";
    result.params = {
        {"half_length", params.half_length},
        {"width", params.width},
        {"anisotropy", params.anisotropy},
        {"delta", params.delta},
        {"sectors", sectors},
        {"constant_potential", params.constant_potential},
        {"sample_index", params.sample_index},
        {"sector_cap", params.sector_cap},
        {"dense_cap", params.dense_cap},
    };
    if (params.field) result.params["field"] = field_json(*params.field);

    RecordTable eigen({"sector", "index", "eigenvalue", "in_droplet_band"});
    RecordTable bands({"sector", "dimension", "band_rank", "band_lo", "band_hi"});
    const double lo = params.width / params.anisotropy;
    const double hi = lo + (params.width + 1.0 - params.delta) / params.anisotropy;
    for (int n : sectors) {
        const SectorBasis basis = enumerate_sector(geom, n, params.sector_cap);
        const SectorSpectrum spec =
            solve_sector(build_hamiltonian(basis, params.anisotropy, v), params.dense_cap);
        const BandProjector proj =
            droplet_projector(spec, params.width, params.anisotropy, params.delta);
        for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
            const bool in_band = std::find(proj.eigen_indices.begin(), proj.eigen_indices.end(),
                                           static_cast<int>(i)) != proj.eigen_indices.end();
            eigen.add({fmt_int(n), fmt_int(i), fmt_g(spec.eigenvalues(i)),
                       in_band ? "1" : "0"});
        }
        bands.add({fmt_int(n), fmt_int(static_cast<long long>(basis.size())),
                   fmt_int(proj.rank()), fmt_g(lo), fmt_g(hi)});
    }
    result.tables.emplace("eigenvalues", std::move(eigen));
    result.tables.emplace("bands", std::move(bands));
    result.wall_seconds = clock.seconds();
    return result;
}

// ------------------------------------------------------------------
// bound suite
// ------------------------------------------------------------------

namespace {

void suite_fsum(const BoundSuiteParams& params, int width, RecordTable& checks,
                bool& all_pass) {
    const int n = width * width;
    const int k = width;   // rectangle depth for N = M^2
    const RectangleSpec rect{1, k, width};
    for (double mu : params.mu_grid) {
        const double cap = fsum_cap(width, mu);
        double prev_gap = -1.0;
        bool gaps_monotone = true;
        double first_gap = 0.0;
        double last_gap = 0.0;
        for (int margin : params.fsum_margins) {
            const ColumnWindow window{1 - margin, k + margin};
            const std::uint64_t count =
                binomial(window.columns() * width, n);
            if (count > params.enum_cap) {
                checks.add({"fsum_cap",
                            label("M=%d N=%d mu=%.12g window=%s", width, n, mu,
                                  window.to_string().c_str()),
                            "", "", "", kSkip});
                continue;
            }
            const FsumInterval fs = fsum_truncated(rect, mu, window, params.enum_cap);
            const bool ok = fs.lower <= cap && std::isfinite(fs.upper) && fs.lower <= fs.upper;
            checks.add({"fsum_cap",
                        label("M=%d N=%d mu=%.12g window=%s", width, n, mu,
                              window.to_string().c_str()),
                        fmt_g(fs.lower), fmt_g(cap), fmt_g(cap - fs.lower),
                        ok ? kPass : kFail});
            all_pass = all_pass && ok;
            const double gap = fs.upper - fs.lower;
            if (prev_gap >= 0.0 && gap > prev_gap) gaps_monotone = false;
            if (prev_gap < 0.0) first_gap = gap;
            prev_gap = gap;
            last_gap = gap;
        }
        checks.add({"fsum_gap_monotone", label("M=%d N=%d mu=%.12g", width, n, mu),
                    fmt_g(last_gap), fmt_g(first_gap), fmt_g(first_gap - last_gap),
                    gaps_monotone ? kPass : kFail});
        all_pass = all_pass && gaps_monotone;
    }
}

void suite_boundary(const BoundSuiteParams& params, int width, RecordTable& checks,
                    bool& all_pass) {
    if (width > 2) return;   // the exhaustive window check is specified for M <= 2
    for (int n : {1, 2, 3, 4}) {
        if (!is_admissible_particle_number(n, width)) continue;
        const RectangleSpec rect{1, n / width, width};
        const ColumnWindow window = centered_window(rect, params.pointwise_window);
        const std::vector<Vertex> sites = window_sites(window, width);
        const Configuration target = rect.configuration();

        std::int64_t worst_margin = std::numeric_limits<std::int64_t>::max();
        std::int64_t worst_lower = 0;
        std::int64_t worst_dist = 0;
        std::uint64_t count = 0;
        CombinationGen gen(static_cast<int>(sites.size()), n);
        std::vector<int> comb;
        gen.first(comb);
        do {
            std::vector<Vertex> pts;
            pts.reserve(static_cast<std::size_t>(n));
            for (int idx : comb) pts.push_back(sites[static_cast<std::size_t>(idx)]);
            const Configuration x(std::move(pts));
            const std::int64_t dist = config_distance(x, target);
            const std::int64_t lower = boundary_distance_lower(x, rect);
            if (dist - lower < worst_margin) {
                worst_margin = dist - lower;
                worst_lower = lower;
                worst_dist = dist;
            }
            ++count;
        } while (gen.next(comb));

        const bool ok = worst_margin >= 0;
        checks.add({"boundary_lower",
                    label("M=%d N=%d window=%s configs=%llu", width, n,
                          window.to_string().c_str(),
                          static_cast<unsigned long long>(count)),
                    fmt_int(worst_lower), fmt_int(worst_dist), fmt_int(worst_margin),
                    ok ? kPass : kFail});
        all_pass = all_pass && ok;
    }
}

void suite_family_fsum(const BoundSuiteParams& params, int width, RecordTable& checks,
                       bool& all_pass) {
    const StripGeometry geom = build_strip(2, width);
    const int k = std::max(width, 2);
    const int n = k * width;
    const RectangleSpec rect{1, k, width};
    const ColumnWindow window = centered_window(rect, 12);
    for (double mu : params.mu_grid) {
        for (int j = 1; j <= 2; ++j) {
            if (j > n || n - j > geom.left_block_size()) continue;
            const FamilyFsumCheck check = family_fsum_check(geom, n, j, mu, window);
            checks.add({"family_fsum",
                        label("M=%d l=2 N=%d j=%d mu=%.12g window=%s", width, n, j, mu,
                              window.to_string().c_str()),
                        fmt_g(check.lhs), fmt_g(check.rhs_upper),
                        fmt_g(check.rhs_upper - check.lhs), check.pass ? kPass : kFail});
            all_pass = all_pass && check.pass;
        }
    }
}

struct SuiteInstance {
    int ell;
    int sector;
    std::string v_label;
    SitePotential potential;
};

std::vector<SuiteInstance> locality_instances(const BoundSuiteParams& params, int width) {
    const std::vector<int> ells = width == 1 ? std::vector<int>{2, 3} : std::vector<int>{2};
    std::vector<SuiteInstance> out;
    for (int ell : ells) {
        const StripGeometry geom = build_strip(ell, width);
        std::vector<std::pair<std::string, SitePotential>> potentials;
        potentials.emplace_back("zero", SitePotential::zero(geom));
        const RandomFieldSpec field = uniform_field(1.0, params.seed);
        for (int s = 0; s < params.random_potentials; ++s) {
            potentials.emplace_back(label("uniform(0,1)#%d", s),
                                    sample_field(field, geom, static_cast<std::uint64_t>(s)));
        }
        for (int n : admissible_sectors(ell, width)) {
            // singleton crossing sets need the left block to absorb N-1
            if (n - 1 > geom.left_block_size()) continue;
            if (binomial(geom.num_vertices(), n) > params.sector_cap) continue;
            for (const auto& [vlabel, pot] : potentials)
                out.push_back({ell, n, vlabel, pot});
        }
    }
    return out;
}

void suite_locality(const BoundSuiteParams& params, int width, RecordTable& checks,
                    bool& all_pass) {
    for (const SuiteInstance& inst : locality_instances(params, width)) {
        const StripGeometry geom = build_strip(inst.ell, width);
        std::vector<Configuration> singletons;
        for (int i = geom.left_block_size(); i < geom.num_vertices(); ++i)
            singletons.push_back(Configuration({geom.vertex(i)}));
        const LocalityReport report =
            droplet_locality_check(geom, params.anisotropy, params.delta, inst.potential,
                                   inst.sector, singletons, params.sector_cap,
                                   params.dense_cap);
        const std::string instance = label("M=%d l=%d N=%d V=%s", width, inst.ell,
                                           inst.sector, inst.v_label.c_str());
        if (report.band_rank == 0) {
            checks.add({"proj_locality", instance, "", "", "", kSkip});
            continue;
        }
        const auto worst = std::min_element(
            report.rows.begin(), report.rows.end(),
            [](const LocalityRow& a, const LocalityRow& b) { return a.margin < b.margin; });
        checks.add({"proj_locality", instance, fmt_g(worst->norm), fmt_g(worst->bound),
                    fmt_g(worst->margin), report.all_pass ? kPass : kFail});
        all_pass = all_pass && report.all_pass;
    }
}

void suite_crossing(const BoundSuiteParams& params, int width, RecordTable& checks,
                    bool& all_pass) {
    const std::vector<double> alphas = {0.3, 0.5, 0.7};
    for (const SuiteInstance& inst : locality_instances(params, width)) {
        const StripGeometry geom = build_strip(inst.ell, width);
        const SectorBasis basis = enumerate_sector(geom, inst.sector, params.sector_cap);
        const SectorSpectrum spec = solve_sector(
            build_hamiltonian(basis, params.anisotropy, inst.potential), params.dense_cap);
        const BandProjector proj =
            droplet_projector(spec, width, params.anisotropy, params.delta);
        const std::string instance = label("M=%d l=%d N=%d V=%s", width, inst.ell,
                                           inst.sector, inst.v_label.c_str());
        if (proj.rank() == 0) {
            checks.add({"renyi_crossing", instance, "", "", "", kSkip});
            continue;
        }
        double worst_margin = std::numeric_limits<double>::infinity();
        double worst_lhs = 0.0;
        double worst_rhs = 0.0;
        bool ok = true;
        for (int i = 0; i < proj.rank(); ++i) {
            for (double alpha : alphas) {
                const CrossingCheck c =
                    renyi_crossing_check(proj.columns.col(i), basis, proj, alpha);
                ok = ok && c.pass;
                if (c.rhs - c.lhs < worst_margin) {
                    worst_margin = c.rhs - c.lhs;
                    worst_lhs = c.lhs;
                    worst_rhs = c.rhs;
                }
            }
        }
        checks.add({"renyi_crossing", instance, fmt_g(worst_lhs), fmt_g(worst_rhs),
                    fmt_g(worst_margin), ok ? kPass : kFail});
        all_pass = all_pass && ok;
    }
}

}  // namespace

ExperimentResult run_bound_suite(const BoundSuiteParams& params) {
    WallClock clock;
    for (double mu : params.mu_grid)
        if (!(mu > 0.0)) throw std::invalid_argument("mu grid entries must be positive");
    for (int width : params.widths)
        if (width < 1) throw std::invalid_argument("widths must be >= 1");
    if (params.pointwise_window < 1)
        throw std::invalid_argument("pointwise window must be >= 1");

    ExperimentResult result;
    result.id = "bounds";
    result.params = {
        {"widths", params.widths},
        {"anisotropy", params.anisotropy},
        {"delta", params.delta},
        {"mu_grid", params.mu_grid},
        {"fsum_margins", params.fsum_margins},
        {"pointwise_window", params.pointwise_window},
        {"seed", params.seed},
        {"random_potentials", params.random_potentials},
        {"sector_cap", params.sector_cap},
        {"dense_cap", params.dense_cap},
        {"enum_cap", params.enum_cap},
    };

    RecordTable checks({"bound", "instance", "lhs", "rhs", "margin", "status"});
    bool all_pass = true;
    for (int width : params.widths) {
        suite_fsum(params, width, checks, all_pass);
        suite_boundary(params, width, checks, all_pass);
        suite_family_fsum(params, width, checks, all_pass);
        suite_locality(params, width, checks, all_pass);
        suite_crossing(params, width, checks, all_pass);
    }
    result.tables.emplace("checks", std::move(checks));
    result.all_pass = all_pass;
    result.wall_seconds = clock.seconds();
    return result;
}

// ------------------------------------------------------------------
// entanglement scaling
// ------------------------------------------------------------------

ExperimentResult run_ee_scaling(const EEScalingParams& params) {
    WallClock clock;
    if (params.samples < 0) throw std::invalid_argument("negative sample count");
    for (double alpha : params.alpha_grid)
        if (!(alpha > 0.0 && alpha < 1.0))
            throw std::invalid_argument("alpha grid entries must be in (0, 1)");
    const DropletConstants dc =
        droplet_constants(params.width, params.delta, params.anisotropy);

    ExperimentResult result;
    result.id = "ee_scaling";
    result.params = {
        {"width", params.width},       {"anisotropy", params.anisotropy},
        {"delta", params.delta},       {"ells", params.ells},
        {"samples", params.samples},   {"seed", params.seed},
        {"alpha_grid", params.alpha_grid}, {"sector_cap", params.sector_cap},
        {"dense_cap", params.dense_cap},
    };

    RecordTable summary({"ell", "sectors", "nonempty_bands", "best_sector", "estimate",
                         "cap", "cap_alpha", "estimate_over_log_ell", "status"});
    RecordTable states({"ell", "M", "N", "Delta", "delta", "V", "vector_id", "ee",
                        "ee_half"});
    bool all_pass = true;

    for (int ell : params.ells) {
        const StripGeometry geom = build_strip(ell, params.width);
        const SitePotential v = SitePotential::zero(geom);

        double cap = std::numeric_limits<double>::infinity();
        double cap_alpha = 0.0;
        for (double alpha : params.alpha_grid) {
            const double value = renyi_volume_cap(alpha, ell, dc);
            if (value < cap) {
                cap = value;
                cap_alpha = alpha;
            }
        }

        int sectors_scanned = 0;
        int nonempty = 0;
        int best_sector = -1;
        double best_ee = -1.0;
        for (int n : admissible_sectors(ell, params.width)) {
            if (binomial(geom.num_vertices(), n) > params.sector_cap)
                throw std::invalid_argument("sector exceeds cap in ee scaling");
            ++sectors_scanned;
            const SectorBasis basis = enumerate_sector(geom, n, params.sector_cap);
            const SectorSpectrum spec = solve_sector(
                build_hamiltonian(basis, params.anisotropy, v), params.dense_cap);
            const BandProjector proj =
                droplet_projector(spec, params.width, params.anisotropy, params.delta);
            if (proj.rank() == 0) continue;
            ++nonempty;
            const EESupEstimate est = subspace_ee_sup_estimate(
                proj, basis, params.samples,
                mix64(params.seed, (static_cast<std::uint64_t>(ell) << 32) |
                                       static_cast<std::uint64_t>(n)));
            const double ee_half =
                entropy_renyi(reduce(est.argmax_state, basis, Side::right), 0.5);
            states.add({fmt_int(ell), fmt_int(params.width), fmt_int(n),
                        fmt_g(params.anisotropy), fmt_g(params.delta), "zero", est.argmax,
                        fmt_g(est.max_entropy), fmt_g(ee_half)});
            if (est.max_entropy > best_ee) {
                best_ee = est.max_entropy;
                best_sector = n;
            }
        }

        if (nonempty == 0) {
            summary.add({fmt_int(ell), fmt_int(sectors_scanned), "0", "-1", fmt_g(0.0),
                         fmt_g(cap), fmt_g(cap_alpha), "", kSkip});
            continue;
        }
        const bool ok = best_ee <= cap;
        summary.add({fmt_int(ell), fmt_int(sectors_scanned), fmt_int(nonempty),
                     fmt_int(best_sector), fmt_g(best_ee), fmt_g(cap), fmt_g(cap_alpha),
                     fmt_g(best_ee / std::log(static_cast<double>(ell))),
                     ok ? kPass : kFail});
        all_pass = all_pass && ok;
    }

    result.tables.emplace("summary", std::move(summary));
    result.tables.emplace("states", std::move(states));
    result.all_pass = all_pass;
    result.wall_seconds = clock.seconds();
    return result;
}

// ------------------------------------------------------------------
// disorder Monte Carlo
// ------------------------------------------------------------------

ExperimentResult run_mc_arealaw(const MCArealawParams& params) {
    WallClock clock;
    validate_field(params.field);
    if (params.n_samples < 1) throw std::invalid_argument("need at least one sample");
    if (params.crossing_samples < 1) throw std::invalid_argument("need crossing samples");

    const DropletConstants dc =
        droplet_constants(params.width, params.delta, params.anisotropy);
    const int depth = threshold_depth(params.field);
    const double p = threshold_prob(params.field);
    const DisorderConstants xc = disorder_constants(dc, p, depth);
    const double cap = ee_expectation_cap(dc, xc);

    ExperimentResult result;
    result.id = "mc_arealaw";
    result.params = {
        {"width", params.width},
        {"anisotropy", params.anisotropy},
        {"delta", params.delta},
        {"ells", params.ells},
        {"field", field_json(params.field)},
        {"n_samples", params.n_samples},
        {"subspace_samples", params.subspace_samples},
        {"crossing_samples", params.crossing_samples},
        {"crossing_js", params.crossing_js},
        {"threshold_depth", depth},
        {"threshold_prob", p},
        {"lambda", xc.lambda},
        {"C_tilde", xc.C_tilde},
        {"expectation_cap", cap},
        {"sector_cap", params.sector_cap},
        {"dense_cap", params.dense_cap},
    };

    RecordTable samples({"ell", "sample", "ee", "nonempty_bands", "all_empty"});
    RecordTable summary(
        {"ell", "n", "mean_ee", "stderr_ee", "cap", "empty_samples", "status"});
    bool all_pass = true;

    for (int ell : params.ells) {
        const StripGeometry geom = build_strip(ell, params.width);
        std::vector<SectorBasis> bases;
        for (int n : admissible_sectors(ell, params.width)) {
            if (binomial(geom.num_vertices(), n) > params.sector_cap)
                throw std::invalid_argument("sector exceeds cap in mc arealaw");
            bases.push_back(enumerate_sector(geom, n, params.sector_cap));
        }

        double sum = 0.0;
        double sum_sq = 0.0;
        int empty_count = 0;
        for (int s = 0; s < params.n_samples; ++s) {
            const SitePotential v =
                sample_field(params.field, geom, static_cast<std::uint64_t>(s));
            double ee = 0.0;
            int nonempty = 0;
            for (const SectorBasis& basis : bases) {
                const SectorSpectrum spec = solve_sector(
                    build_hamiltonian(basis, params.anisotropy, v), params.dense_cap);
                const BandProjector proj = droplet_projector(spec, params.width,
                                                             params.anisotropy,
                                                             params.delta);
                if (proj.rank() == 0) continue;
                ++nonempty;
                const std::uint64_t stream = mix64(
                    mix64(params.field.seed,
                          (static_cast<std::uint64_t>(ell) << 32) |
                              static_cast<std::uint64_t>(s)),
                    static_cast<std::uint64_t>(basis.particle_count()));
                const EESupEstimate est = subspace_ee_sup_estimate(
                    proj, basis, params.subspace_samples, stream);
                ee = std::max(ee, est.max_entropy);
            }
            if (nonempty == 0) ++empty_count;   // contributes ee = 0 by convention
            samples.add({fmt_int(ell), fmt_int(s), fmt_g(ee), fmt_int(nonempty),
                         nonempty == 0 ? "1" : "0"});
            sum += ee;
            sum_sq += ee * ee;
        }
        const double n = params.n_samples;
        const double mean = sum / n;
        const double var = n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) : 0.0;
        const double se = std::sqrt(var / n);
        const bool ok = mean <= cap;
        summary.add({fmt_int(ell), fmt_int(params.n_samples), fmt_g(mean), fmt_g(se),
                     fmt_g(cap), fmt_int(empty_count), ok ? kPass : kFail});
        all_pass = all_pass && ok;
    }

    // disorder-averaged crossing-norm decay at the largest strip
    RecordTable decay({"ell", "N", "j", "X", "n", "mean_norm", "stderr_norm", "rhs",
                       "allowance", "status"});
    {
        const int ell = *std::max_element(params.ells.begin(), params.ells.end());
        const StripGeometry geom = build_strip(ell, params.width);
        const int max_j =
            *std::max_element(params.crossing_js.begin(), params.crossing_js.end());
        int k = params.width;   // smallest admissible depth with kM >= max_j
        while (k * params.width < max_j) ++k;
        const int n_cross = k * params.width;
        if (n_cross > geom.num_vertices())
            throw std::invalid_argument("crossing sector does not fit the strip");
        const SectorBasis basis = enumerate_sector(geom, n_cross, params.sector_cap);

        struct CrossingSet {
            int j;
            Configuration x;
            std::vector<std::size_t> ranks;
        };
        std::vector<CrossingSet> sets;
        for (int j : params.crossing_js) {
            if (j < 1 || j > geom.left_block_size() || j > n_cross ||
                n_cross - j > geom.left_block_size())
                throw std::invalid_argument("crossing size out of range");
            std::vector<Vertex> pts;
            for (int i = 0; i < j; ++i) pts.push_back(geom.vertex(geom.left_block_size() + i));
            CrossingSet cs{j, Configuration(std::move(pts)), {}};
            for (const Configuration& m : family_members(cs.x, n_cross, geom))
                cs.ranks.push_back(basis.rank_of(m));
            sets.push_back(std::move(cs));
        }

        std::vector<double> sum(sets.size(), 0.0), sum_sq(sets.size(), 0.0);
        for (int s = 0; s < params.crossing_samples; ++s) {
            const SitePotential v =
                sample_field(params.field, geom, static_cast<std::uint64_t>(s));
            const SectorSpectrum spec = solve_sector(
                build_hamiltonian(basis, params.anisotropy, v), params.dense_cap);
            const BandProjector proj = droplet_projector(spec, params.width,
                                                         params.anisotropy, params.delta);
            for (std::size_t i = 0; i < sets.size(); ++i) {
                const double norm = chi_norm(sets[i].ranks, proj);
                sum[i] += norm;
                sum_sq[i] += norm * norm;
            }
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const double n = params.crossing_samples;
            const double mean = sum[i] / n;
            const double var =
                n > 1 ? std::max(0.0, (sum_sq[i] - n * mean * mean) / (n - 1)) : 0.0;
            const double se = std::sqrt(var / n);
            const double rhs = xc.C_tilde * std::pow(xc.lambda, sets[i].j);
            const bool ok = mean <= rhs + 3.0 * se;
            decay.add({fmt_int(ell), fmt_int(n_cross), fmt_int(sets[i].j),
                       to_string(sets[i].x), fmt_int(params.crossing_samples), fmt_g(mean),
                       fmt_g(se), fmt_g(rhs), fmt_g(3.0 * se), ok ? kPass : kFail});
            all_pass = all_pass && ok;
        }
    }

    result.tables.emplace("samples", std::move(samples));
    result.tables.emplace("summary", std::move(summary));
    result.tables.emplace("crossing_decay", std::move(decay));
    result.all_pass = all_pass;
    result.wall_seconds = clock.seconds();
    return result;
}

// ------------------------------------------------------------------
// f-sum scan
// ------------------------------------------------------------------

ExperimentResult run_fsum_scan(const FsumScanParams& params) {
    WallClock clock;
    for (double mu : params.mu_grid)
        if (!(mu > 0.0)) throw std::invalid_argument("mu grid entries must be positive");

    ExperimentResult result;
    result.id = "fsum";
    result.params = {
        {"widths", params.widths},
        {"mu_grid", params.mu_grid},
        {"margins", params.margins},
        {"enum_cap", params.enum_cap},
    };

    RecordTable rows({"M", "N", "mu", "window", "configs", "level_prefix", "lower",
                      "upper", "gap", "cap", "status"});
    RecordTable monotone({"M", "N", "mu", "gaps", "status"});
    bool all_pass = true;

    for (int width : params.widths) {
        const int n = width * width;
        const RectangleSpec rect{1, width, width};
        std::vector<std::pair<ColumnWindow, DistanceHistogram>> hists;
        for (int margin : params.margins) {
            const ColumnWindow window{1 - margin, width + margin};
            if (binomial(window.columns() * width, n) > params.enum_cap) continue;
            hists.emplace_back(window,
                               rect_distance_histogram(rect, window, params.enum_cap));
        }
        for (double mu : params.mu_grid) {
            const double cap = fsum_cap(width, mu);
            std::string gaps;
            bool gaps_ok = true;
            double prev_gap = std::numeric_limits<double>::infinity();
            for (const auto& [window, hist] : hists) {
                const FsumInterval fs = fsum_from_histogram(hist, rect, mu, window);
                const double gap = fs.upper - fs.lower;
                const bool ok =
                    fs.lower <= cap && std::isfinite(fs.upper) && fs.lower <= fs.upper;
                rows.add({fmt_int(width), fmt_int(n), fmt_g(mu), window.to_string(),
                          fmt_int(static_cast<long long>(fs.config_count)),
                          fmt_int(fs.level_prefix), fmt_g(fs.lower), fmt_g(fs.upper),
                          fmt_g(gap), fmt_g(cap), ok ? kPass : kFail});
                all_pass = all_pass && ok;
                if (gap > prev_gap) gaps_ok = false;
                prev_gap = gap;
                if (!gaps.empty()) gaps += ';';
                gaps += fmt_g(gap);
            }
            monotone.add({fmt_int(width), fmt_int(n), fmt_g(mu), gaps,
                          gaps_ok ? kPass : kFail});
            all_pass = all_pass && gaps_ok;
        }
    }

    result.tables.emplace("brackets", std::move(rows));
    result.tables.emplace("gap_monotonicity", std::move(monotone));
    result.all_pass = all_pass;
    result.wall_seconds = clock.seconds();
    return result;
}

}  // namespace xxzstrip
