// acceptance_main.cpp - the end-to-end gate of the project. Twelve checks,
// one printed line each, exit code equal to the number of failures. Each
// check is one verifiable statement about the library, tested against
// brute force, closed forms, or its own certified caps.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "xxzstrip/bounds.hpp"
#include "xxzstrip/entanglement.hpp"
#include "xxzstrip/experiments.hpp"
#include "xxzstrip/hamiltonian.hpp"
#include "xxzstrip/levels.hpp"
#include "xxzstrip/metric.hpp"
#include "xxzstrip/random_field.hpp"

using namespace xxzstrip;

namespace {

int g_failures = 0;
int g_index = 0;

void gate(const char* what, const std::function<bool(std::string&)>& fn) {
    ++g_index;
    std::string note;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s - %s (%.1f s)%s%s\n", g_index, ok ? "pass" : "FAIL", what,
                secs, note.empty() ? "" : " | ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

Configuration random_config(std::mt19937& gen, int n, int max_col, int width) {
    std::vector<Vertex> all;
    for (int c = 1; c <= max_col; ++c)
        for (int r = 1; r <= width; ++r) all.push_back({c, r});
    std::shuffle(all.begin(), all.end(), gen);
    all.resize(static_cast<std::size_t>(n));
    return Configuration(std::move(all));
}

// ------------------------------------------------------------------
// 1. transport metric against the permutation scan
// ------------------------------------------------------------------

bool crit_metric(std::string& note) {
    std::mt19937 gen(12345);
    std::uniform_int_distribution<int> width_d(1, 2);
    std::uniform_int_distribution<int> n_d(1, 4);
    std::uniform_int_distribution<int> col_d(4, 6);
    for (int t = 0; t < 200; ++t) {
        const int m = width_d(gen);
        const int n = n_d(gen);
        const int cols = col_d(gen);
        const Configuration x = random_config(gen, n, cols, m);
        const Configuration y = random_config(gen, n, cols, m);
        if (config_distance(x, y) != oracle::config_distance(x, y)) {
            note = "mismatch on pair " + std::to_string(t) + ": " + to_string(x) + " vs " +
                   to_string(y);
            return false;
        }
    }
    note = "200 random pairs exact";
    return true;
}

// ------------------------------------------------------------------
// 2. family distance against exhaustive subset enumeration
// ------------------------------------------------------------------

bool crit_family(std::string& note) {
    std::mt19937 gen(777);
    const std::vector<std::pair<int, int>> shapes = {{2, 1}, {3, 1}, {4, 1}, {2, 2}, {4, 2}};
    int done = 0;
    int attempts = 0;
    while (done < 100 && attempts < 4000) {
        ++attempts;
        const auto [ell, m] = shapes[static_cast<std::size_t>(done) % shapes.size()];
        const StripGeometry geom = build_strip(ell, m);
        std::vector<Vertex> right;
        for (int i = geom.left_block_size(); i < geom.num_vertices(); ++i)
            right.push_back(geom.vertex(i));
        std::shuffle(right.begin(), right.end(), gen);
        std::uniform_int_distribution<int> xsz_d(1, std::min<int>(3, static_cast<int>(right.size())));
        right.resize(static_cast<std::size_t>(xsz_d(gen)));
        std::sort(right.begin(), right.end());
        const Configuration x{std::vector<Vertex>(right.begin(), right.end())};
        std::uniform_int_distribution<int> extra_d(0, std::min(3, geom.left_block_size()));
        const int n = x.particle_count() + extra_d(gen);
        if (n % m != 0) continue;   // target rectangle needs full columns
        std::uniform_int_distribution<int> start_d(-1, 2 * ell + 2);
        const RectangleSpec target{start_d(gen), n / m, m};
        const std::int64_t fast = family_distance(x, n, geom, target);
        const std::int64_t slow =
            oracle::family_distance_enum(x, n, geom, target.configuration());
        if (fast != slow) {
            note = "mismatch: X=" + to_string(x) + " N=" + std::to_string(n) +
                   " got " + std::to_string(fast) + " want " + std::to_string(slow);
            return false;
        }
        ++done;
    }
    if (done < 100) {
        note = "only " + std::to_string(done) + " instances generated";
        return false;
    }
    note = "100 instances exact";
    return true;
}

// ------------------------------------------------------------------
// 3. configuration-sum brackets under the closed cap, gaps shrinking
// ------------------------------------------------------------------

bool crit_brackets(std::string& note) {
    for (int m : {1, 2, 3}) {
        const int k = m;   // N = M*M
        const RectangleSpec rect{1, k, m};
        const std::vector<int> margins =
            m == 3 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2, 3, 4};
        std::vector<DistanceHistogram> hists;
        std::vector<ColumnWindow> windows;
        for (int mg : margins) {
            const ColumnWindow w{1 - mg, k + mg};
            hists.push_back(rect_distance_histogram(rect, w));
            windows.push_back(w);
        }
        for (double mu : {0.25, 0.5, 1.0, 2.0}) {
            const double cap = fsum_cap(m, mu);
            double prev_gap = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < hists.size(); ++i) {
                const FsumInterval iv = fsum_from_histogram(hists[i], rect, mu, windows[i]);
                const double gap = iv.upper - iv.lower;
                if (!(iv.lower <= cap) || !std::isfinite(iv.upper) || !(gap <= prev_gap)) {
                    note = "M=" + std::to_string(m) + " mu=" + fmt_g(mu) + " window " +
                           windows[i].to_string() + ": lower=" + fmt_g(iv.lower) +
                           " cap=" + fmt_g(cap) + " gap=" + fmt_g(gap);
                    return false;
                }
                prev_gap = gap;
            }
        }
    }
    note = "widths 1..3, four decay rates, all windows";
    return true;
}

// ------------------------------------------------------------------
// 4. boundary level bound pointwise on every window configuration
// ------------------------------------------------------------------

bool crit_boundary(std::string& note) {
    long long checked = 0;
    for (int m : {1, 2}) {
        for (int k = m; k * m <= 4; ++k) {
            const int n = k * m;
            const RectangleSpec rect{1, k, m};
            const int extra = 10 - k;
            const int left = extra / 2;
            const ColumnWindow w{1 - left, k + (extra - left)};
            const std::vector<Vertex> sites = window_sites(w, m);
            const Configuration target = rect.configuration();
            CombinationGen gen(static_cast<int>(sites.size()), n);
            std::vector<int> comb;
            gen.first(comb);
            do {
                std::vector<Vertex> pts;
                pts.reserve(static_cast<std::size_t>(n));
                for (int idx : comb) pts.push_back(sites[static_cast<std::size_t>(idx)]);
                const Configuration x{std::move(pts)};
                if (boundary_distance_lower(x, rect) > config_distance(x, target)) {
                    note = "violated at X=" + to_string(x) + " N=" + std::to_string(n);
                    return false;
                }
                ++checked;
            } while (gen.next(comb));
        }
    }
    note = std::to_string(checked) + " configurations, zero tolerance";
    return true;
}

// ------------------------------------------------------------------
// 5. crossing family sum under its certified cap
// ------------------------------------------------------------------

bool crit_family_sum(std::string& note) {
    const StripGeometry geom = build_strip(2, 1);
    for (double mu : {0.5, 1.0}) {
        for (int j : {1, 2}) {
            const FamilyFsumCheck chk = family_fsum_check(geom, 2, j, mu, ColumnWindow{-4, 7});
            if (!chk.pass) {
                note = "mu=" + fmt_g(mu) + " j=" + std::to_string(j) + ": lhs=" +
                       fmt_g(chk.lhs) + " cap=" + fmt_g(chk.rhs_upper);
                return false;
            }
        }
    }
    note = "two decay rates, crossing sizes 1 and 2";
    return true;
}

// ------------------------------------------------------------------
// 6. two-site closed form and the constant-shift identity
// ------------------------------------------------------------------

bool crit_spectrum(std::string& note) {
    for (double aniso : {2.0, 4.0, 10.0}) {
        const StripGeometry geom = build_strip(1, 1);
        const SectorBasis basis = enumerate_sector(geom, 1);
        const SectorSpectrum spec =
            solve_sector(build_hamiltonian(basis, aniso, SitePotential::zero(geom)));
        const double lo = 0.5 - 0.5 / aniso;
        const double hi = 0.5 + 0.5 / aniso;
        if (std::abs(spec.eigenvalues(0) - lo) > 1e-12 ||
            std::abs(spec.eigenvalues(1) - hi) > 1e-12) {
            note = "two-site eigenvalues off at anisotropy " + fmt_g(aniso);
            return false;
        }
    }

    std::mt19937 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const StripGeometry geom = build_strip(2, 1);
    std::vector<double> vals(static_cast<std::size_t>(geom.num_vertices()));
    for (double& v : vals) v = u(gen);
    const SitePotential v(geom, vals);
    const SectorBasis basis = enumerate_sector(geom, 2);
    const double c = 0.375;
    const SectorSpectrum s0 = solve_sector(build_hamiltonian(basis, 4.0, v));
    const SectorSpectrum s1 = solve_sector(build_hamiltonian(basis, 4.0, v.shifted(c)));
    for (Eigen::Index i = 0; i < s0.eigenvalues.size(); ++i) {
        if (std::abs(s1.eigenvalues(i) - s0.eigenvalues(i) - 2.0 * c) > 1e-10) {
            note = "shift identity off at eigenvalue " + std::to_string(i);
            return false;
        }
    }
    note = "closed form to 1e-12, shift identity to 1e-10";
    return true;
}

// ------------------------------------------------------------------
// 7 and 9 share the instance grid: three strips, zero potential plus
// five seeded disorder draws, every admissible sector with a nonempty
// crossing family.
// ------------------------------------------------------------------

struct Instance {
    StripGeometry geom;
    SitePotential v;
    int particle_count;
};

std::vector<Instance> locality_instances() {
    std::vector<Instance> out;
    const std::vector<std::pair<int, int>> shapes = {{2, 1}, {3, 1}, {2, 2}};
    for (const auto& [ell, m] : shapes) {
        const StripGeometry geom = build_strip(ell, m);
        std::vector<SitePotential> potentials;
        potentials.push_back(SitePotential::zero(geom));
        const RandomFieldSpec field = uniform_field(1.0, 2024);
        for (std::uint64_t s = 0; s < 5; ++s) potentials.push_back(sample_field(field, geom, s));
        for (int n = 1; n <= geom.num_vertices(); ++n) {
            if (!is_admissible_particle_number(n, m)) continue;
            if (n - 1 > geom.left_block_size()) continue;   // singleton family would be empty
            for (const SitePotential& v : potentials) out.push_back({geom, v, n});
        }
    }
    return out;
}

std::vector<Configuration> singletons(const StripGeometry& geom) {
    std::vector<Configuration> out;
    for (int i = geom.left_block_size(); i < geom.num_vertices(); ++i)
        out.push_back(Configuration({geom.vertex(i)}));
    return out;
}

bool crit_locality(std::string& note) {
    long long rows = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const Instance& inst : locality_instances()) {
        const LocalityReport report = droplet_locality_check(
            inst.geom, 4.0, 1.0, inst.v, inst.particle_count, singletons(inst.geom));
        rows += static_cast<long long>(report.rows.size());
        for (const LocalityRow& row : report.rows) worst = std::min(worst, row.margin);
        if (!report.all_pass) {
            note = "violated at 2l=" + std::to_string(2 * inst.geom.half_length()) + " M=" +
                   std::to_string(inst.geom.width()) + " N=" + std::to_string(inst.particle_count);
            return false;
        }
    }
    note = std::to_string(rows) + " crossing rows, worst margin " + fmt_g(worst);
    return true;
}

// ------------------------------------------------------------------
// 8. entanglement kernel invariants and known values
// ------------------------------------------------------------------

bool crit_kernel(std::string& note) {
    {
        const StripGeometry geom = build_strip(1, 1);
        const SectorBasis basis = enumerate_sector(geom, 1);
        Eigen::VectorXd product(2), bell(2);
        product << 1.0, 0.0;
        bell << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        if (std::abs(entropy_vn(reduce(product, basis, Side::right))) > 1e-12 ||
            std::abs(entropy_vn(reduce(bell, basis, Side::right)) - std::log(2.0)) > 1e-12) {
            note = "known values off";
            return false;
        }
    }

    std::mt19937 gen(99);
    std::normal_distribution<double> normal;
    const std::vector<std::tuple<int, int, int>> shapes = {{2, 1, 2}, {2, 2, 3}};
    for (const auto& [ell, m, n] : shapes) {
        const SectorBasis basis = enumerate_sector(build_strip(ell, m), n);
        for (int t = 0; t < 10; ++t) {
            Eigen::VectorXd psi(static_cast<Eigen::Index>(basis.size()));
            for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = normal(gen);
            psi.normalize();
            const ReducedState left = reduce(psi, basis, Side::left);
            const ReducedState right = reduce(psi, basis, Side::right);
            if (std::abs(left.trace() - 1.0) > 1e-10) {
                note = "trace off";
                return false;
            }
            for (double lam : reduced_spectrum(left)) {
                if (lam < -1e-10) {
                    note = "negative weight";
                    return false;
                }
            }
            const double vn_l = entropy_vn(left);
            if (std::abs(vn_l - entropy_vn(right)) > 1e-9) {
                note = "side symmetry off";
                return false;
            }
            for (double alpha : {0.3, 0.5, 0.7}) {
                if (vn_l > entropy_renyi(left, alpha) + 1e-12) {
                    note = "entropy ordering off at alpha " + fmt_g(alpha);
                    return false;
                }
            }
        }
    }
    note = "trace, positivity, symmetry, ordering, known values";
    return true;
}

// ------------------------------------------------------------------
// 9. Renyi trace cap for every droplet eigenvector on the grid above
// ------------------------------------------------------------------

bool crit_crossing(std::string& note) {
    long long vectors = 0;
    for (const Instance& inst : locality_instances()) {
        const SectorBasis basis = enumerate_sector(inst.geom, inst.particle_count);
        const SectorSpectrum spec =
            solve_sector(build_hamiltonian(basis, 4.0, inst.v));
        const BandProjector proj = droplet_projector(spec, inst.geom.width(), 4.0, 1.0);
        for (int i = 0; i < proj.rank(); ++i) {
            ++vectors;
            for (double alpha : {0.3, 0.5, 0.7}) {
                const CrossingCheck chk =
                    renyi_crossing_check(proj.columns.col(i), basis, proj, alpha);
                if (!chk.pass) {
                    note = "violated: 2l=" + std::to_string(2 * inst.geom.half_length()) +
                           " M=" + std::to_string(inst.geom.width()) + " N=" +
                           std::to_string(inst.particle_count) + " alpha=" + fmt_g(alpha);
                    return false;
                }
            }
        }
    }
    if (vectors == 0) {
        note = "no droplet vectors found on the instance grid";
        return false;
    }
    note = std::to_string(vectors) + " droplet vectors, three Renyi orders";
    return true;
}

// ------------------------------------------------------------------
// 10. entropy sup-estimates below the volume cap
// ------------------------------------------------------------------

std::size_t column_index(const RecordTable& table, const std::string& name) {
    for (std::size_t i = 0; i < table.columns().size(); ++i)
        if (table.columns()[i] == name) return i;
    throw std::logic_error("missing column " + name);
}

bool crit_scaling(std::string& note) {
    EEScalingParams params;   // width 1, half lengths {2,3,4}, zero potential
    const ExperimentResult result = run_ee_scaling(params);
    const RecordTable& summary = result.tables.at("summary");
    const std::size_t c_est = column_index(summary, "estimate");
    const std::size_t c_cap = column_index(summary, "cap");
    const std::size_t c_ratio = column_index(summary, "estimate_over_log_ell");
    const std::size_t c_status = column_index(summary, "status");
    double max_ratio = 0.0;
    for (const auto& row : summary.rows()) {
        if (row[c_status] == "skip") continue;
        if (row[c_status] != "pass" || std::stod(row[c_est]) > std::stod(row[c_cap])) {
            note = "estimate above cap";
            return false;
        }
        max_ratio = std::max(max_ratio, std::stod(row[c_ratio]));
    }
    if (!result.all_pass) {
        note = "experiment reports a failure";
        return false;
    }
    note = "max estimate / log(l) = " + fmt_g(max_ratio) + " (recorded, no target)";
    return true;
}

// ------------------------------------------------------------------
// 11. disorder-averaged entropy and crossing-norm decay
// ------------------------------------------------------------------

bool crit_disorder(std::string& note) {
    const MCArealawParams params;   // bernoulli(1, 1/2), 100 samples, decay sizes {1,2,3}
    const ExperimentResult result = run_mc_arealaw(params);

    const RecordTable& summary = result.tables.at("summary");
    const std::size_t c_mean = column_index(summary, "mean_ee");
    const std::size_t c_cap = column_index(summary, "cap");
    double worst_ratio = 0.0;
    for (const auto& row : summary.rows()) {
        const double mean = std::stod(row[c_mean]);
        const double cap = std::stod(row[c_cap]);
        if (!(mean <= cap)) {
            note = "mean entropy above expectation cap";
            return false;
        }
        worst_ratio = std::max(worst_ratio, mean / cap);
    }

    const RecordTable& decay = result.tables.at("crossing_decay");
    const std::size_t d_mean = column_index(decay, "mean_norm");
    const std::size_t d_rhs = column_index(decay, "rhs");
    const std::size_t d_allow = column_index(decay, "allowance");
    for (const auto& row : decay.rows()) {
        if (!(std::stod(row[d_mean]) <= std::stod(row[d_rhs]) + std::stod(row[d_allow]))) {
            note = "crossing norm mean above decay bound";
            return false;
        }
    }
    if (!result.all_pass) {
        note = "experiment reports a failure";
        return false;
    }
    note = "mean entropy at most " + fmt_g(100.0 * worst_ratio) + "% of its cap; decay holds";
    return true;
}

// ------------------------------------------------------------------
// 12. byte-for-byte reproducibility of every runner
// ------------------------------------------------------------------

bool same_tables(const ExperimentResult& a, const ExperimentResult& b) {
    if (a.tables.size() != b.tables.size()) return false;
    for (const auto& [name, table] : a.tables) {
        const auto it = b.tables.find(name);
        if (it == b.tables.end() || table.to_csv() != it->second.to_csv()) return false;
    }
    return true;
}

bool crit_reproducible(std::string& note) {
    int runners = 0;
    {
        SpectrumScanParams p;
        p.field = uniform_field(1.0, 11);
        p.sample_index = 3;
        if (!same_tables(run_spectrum_scan(p), run_spectrum_scan(p))) {
            note = "spectrum scan differs between reruns";
            return false;
        }
        ++runners;
    }
    {
        BoundSuiteParams p;
        p.widths = {1};
        p.mu_grid = {0.5};
        p.fsum_margins = {1, 2};
        p.pointwise_window = 6;
        p.random_potentials = 2;
        if (!same_tables(run_bound_suite(p), run_bound_suite(p))) {
            note = "bound suite differs between reruns";
            return false;
        }
        ++runners;
    }
    {
        EEScalingParams p;
        p.ells = {2, 3};
        p.samples = 4;
        if (!same_tables(run_ee_scaling(p), run_ee_scaling(p))) {
            note = "entropy scaling differs between reruns";
            return false;
        }
        ++runners;
    }
    {
        MCArealawParams p;
        p.ells = {2};
        p.n_samples = 5;
        p.crossing_samples = 8;
        p.crossing_js = {1};
        if (!same_tables(run_mc_arealaw(p), run_mc_arealaw(p))) {
            note = "disorder average differs between reruns";
            return false;
        }
        ++runners;
    }
    {
        FsumScanParams p;
        p.widths = {1};
        p.mu_grid = {0.5, 1.0};
        p.margins = {1, 2};
        if (!same_tables(run_fsum_scan(p), run_fsum_scan(p))) {
            note = "bracket scan differs between reruns";
            return false;
        }
        ++runners;
    }
    note = std::to_string(runners) + " runners, identical records";
    return true;
}

}  // namespace

int main() {
    gate("transport metric equals the brute-force matching minimum", crit_metric);
    gate("family distance equals exhaustive subset enumeration", crit_family);
    gate("configuration-sum brackets sit under the closed cap with shrinking gaps",
         crit_brackets);
    gate("boundary level bound holds pointwise on full windows", crit_boundary);
    gate("crossing family sum stays under its certified cap", crit_family_sum);
    gate("two-site spectrum closed form and constant-shift identity", crit_spectrum);
    gate("projector locality bound holds for every singleton crossing", crit_locality);
    gate("entanglement kernel invariants and known values", crit_kernel);
    gate("Renyi trace cap holds for every droplet eigenvector", crit_crossing);
    gate("entropy sup-estimates stay under the volume cap", crit_scaling);
    gate("disorder-averaged entropy and crossing-norm decay stay in bounds", crit_disorder);
    gate("reruns reproduce every record byte for byte", crit_reproducible);

    if (g_failures == 0)
        std::printf("acceptance: all %d criteria pass\n", g_index);
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", g_failures, g_index);
    return g_failures;
}
