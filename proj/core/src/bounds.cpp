// bounds.cpp
#include "xxzstrip/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "xxzstrip/assignment.hpp"

namespace xxzstrip {

namespace {

// log(6 + exp(t)), stable for large t.
double log_6_plus_exp(double t) {
    if (t > 700.0) return t + std::log1p(std::exp(std::log(6.0) - t));
    return std::log(6.0 + std::exp(t));
}

}  // namespace

// ------------------------------------------------------------------
// constants
// ------------------------------------------------------------------

DropletConstants droplet_constants(int width, double delta, double anisotropy) {
    if (width < 1) throw std::invalid_argument("width must be >= 1");
    if (!(anisotropy > 1.0)) throw std::invalid_argument("anisotropy must exceed 1");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    DropletConstants dc;
    dc.width = width;
    dc.delta = delta;
    dc.anisotropy = anisotropy;
    dc.C = 1.5 * std::sqrt(5.0) * std::pow(2.0 * width + 1.0, 1.5) /
           std::min(1.0, std::pow(delta, 1.5));
    dc.mu = 0.5 * std::log1p(delta * anisotropy / (4.0 * width + 2.0));
    return dc;
}

DisorderConstants disorder_constants(const DropletConstants& dc, double p, int k) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0, 1]");
    if (k < 1) throw std::invalid_argument("threshold depth must be >= 1");
    DisorderConstants xc;
    xc.p = p;
    xc.k = k;
    xc.lambda = 1.0 - p + p * std::exp(-dc.mu);
    xc.C_tilde = dc.C * std::exp(dc.mu * (k - 1));
    return xc;
}

// ------------------------------------------------------------------
// f(R, mu)
// ------------------------------------------------------------------

double log_fsum_cap(int width, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    return std::log1p(2.0 * width / mu) + 4.0 * width / mu;
}

double fsum_cap(int width, double mu) { return std::exp(log_fsum_cap(width, mu)); }

DistanceHistogram rect_distance_histogram(const RectangleSpec& rect, ColumnWindow window,
                                          std::uint64_t enum_cap) {
    if (!is_admissible_particle_number(rect.particle_count(), rect.width))
        throw std::invalid_argument("rectangle particle number not admissible");
    if (window.first > rect.start_column || window.last < rect.end_column()) {
        throw std::invalid_argument("window does not cover the rectangle");
    }
    const std::vector<Vertex> sites = window_sites(window, rect.width);
    const int n = static_cast<int>(sites.size());
    const int particles = rect.particle_count();
    const std::uint64_t count = binomial(n, particles);
    if (count > enum_cap) throw std::invalid_argument("window enumeration exceeds cap");

    const std::vector<Vertex> target = rect.configuration().sites();
    // cost of placing a particle from any window site on any rectangle site
    std::vector<std::vector<std::int64_t>> site_cost(n, std::vector<std::int64_t>(particles));
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < particles; ++t) site_cost[i][t] = l1_distance(sites[i], target[t]);
    }

    DistanceHistogram hist;
    CombinationGen gen(n, particles);
    std::vector<int> comb;
    std::vector<std::vector<std::int64_t>> cost(particles,
                                                std::vector<std::int64_t>(particles));
    if (gen.first(comb)) {
        do {
            for (int i = 0; i < particles; ++i) cost[i] = site_cost[comb[i]];
            ++hist[solve_assignment(cost)];
        } while (gen.next(comb));
    }
    return hist;
}

double fsum_tail_bound(int particles, int width, double mu, int level_prefix) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    const double nu = mu / (2.0 * width);
    const int slack = std::max(level_prefix - particles, 0);
    // Configurations missed by the prefix have j >= 1 particles at enumeration
    // index > level_prefix. With m = index - N, the deepest one has m > slack,
    // the rest form an increasing (j-1)-tuple, and the particles at index <= N
    // leave at most C(N, j) choices. Geometric tail times simplex integral:
    const double geo = std::exp(-nu * (slack + 1)) / -std::expm1(-nu);
    double sum = 0.0;
    double pw = 1.0;    // nu^{-(j-1)}
    double fact = 1.0;  // (j-1)!
    for (int j = 1; j <= particles; ++j) {
        if (j >= 2) {
            pw /= nu;
            fact *= (j - 1);
        }
        sum += static_cast<double>(binomial(particles, j)) * pw / fact;
    }
    return geo * sum;
}

FsumInterval fsum_from_histogram(const DistanceHistogram& hist, const RectangleSpec& rect,
                                 double mu, ColumnWindow window) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    FsumInterval out;
    for (const auto& [dist, count] : hist) {
        out.lower += static_cast<double>(count) * std::exp(-mu * static_cast<double>(dist));
        out.config_count += count;
    }
    out.level_prefix = level_prefix_in_window(rect, window);
    out.upper = out.lower + fsum_tail_bound(rect.particle_count(), rect.width, mu,
                                            out.level_prefix);
    return out;
}

FsumInterval fsum_truncated(const RectangleSpec& rect, double mu, ColumnWindow window,
                            std::uint64_t enum_cap) {
    return fsum_from_histogram(rect_distance_histogram(rect, window, enum_cap), rect, mu,
                               window);
}

// ------------------------------------------------------------------
// family sums
// ------------------------------------------------------------------

FamilyFsumCheck family_fsum_check(const StripGeometry& geom, int particles, int j, double mu,
                                  ColumnWindow fsum_window) {
    if (!is_admissible_particle_number(particles, geom.width())) {
        throw std::invalid_argument("inadmissible particle number");
    }
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    const int right_sites = geom.left_block_size();
    if (j < 1 || j > right_sites || j > particles) {
        throw std::invalid_argument("family size out of range");
    }
    if (particles - j > geom.left_block_size()) {
        throw std::invalid_argument("left block cannot absorb the remaining particles");
    }

    FamilyFsumCheck out;
    CombinationGen gen(right_sites, j);
    std::vector<int> comb;
    if (gen.first(comb)) {
        do {
            std::vector<Vertex> pts;
            pts.reserve(j);
            for (int idx : comb) pts.push_back(geom.vertex(geom.left_block_size() + idx));
            const Configuration x(std::move(pts));
            const auto res = family_rect_distance(x, particles, geom);
            out.lhs += std::exp(-mu * static_cast<double>(res.distance));
            ++out.family_count;
        } while (gen.next(comb));
    }

    const RectangleSpec rect{1, rectangle_depth(particles, geom.width()), geom.width()};
    const FsumInterval fs = fsum_truncated(rect, 0.5 * mu, fsum_window);
    const double factor = 8.0 / -std::expm1(-0.5 * mu);
    out.rhs_lower = factor * fs.lower;
    out.rhs_upper = factor * fs.upper;
    // lhs is itself a truncation from below, so comparing against the
    // certified upper end of the f bracket is the sound direction
    out.pass = out.lhs <= out.rhs_upper;
    return out;
}

// ------------------------------------------------------------------
// entropy caps
// ------------------------------------------------------------------

double renyi_volume_cap(double alpha, int ell, const DropletConstants& dc) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    if (ell < 1) throw std::invalid_argument("half-length must be >= 1");
    const double ma = dc.mu * alpha;
    const double log_term = std::log(16.0) + 2.0 * alpha * std::log(dc.C) -
                            std::log(-std::expm1(-ma)) +
                            std::log(static_cast<double>(dc.width) * ell) +
                            log_fsum_cap(dc.width, ma);
    return log_6_plus_exp(log_term) / (1.0 - alpha);
}

double disorder_log_K(double alpha, const DropletConstants& dc, const DisorderConstants& xc) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    const double ma = dc.mu * alpha;
    const double log_lambda_a = alpha * std::log(xc.lambda);
    const double log_term = std::log(2.0) + alpha * (std::log(dc.C) + std::log(xc.C_tilde)) +
                            std::log(8.0) - std::log(-std::expm1(-0.5 * ma)) +
                            log_fsum_cap(dc.width, 0.5 * ma) + log_lambda_a -
                            std::log(-std::expm1(log_lambda_a));
    return log_6_plus_exp(log_term);
}

double disorder_K(double alpha, const DropletConstants& dc, const DisorderConstants& xc) {
    return std::exp(disorder_log_K(alpha, dc, xc));
}

double ee_expectation_cap(const DropletConstants& dc, const DisorderConstants& xc) {
    return 2.0 * disorder_log_K(0.5, dc, xc);
}

double crossing_norm_cap(const std::vector<std::vector<double>>& norms_by_j, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    double total = 0.0;
    for (const auto& group : norms_by_j) {
        for (double n : group) {
            if (n < -1e-9 || n > 1.0 + 1e-9) {
                throw std::invalid_argument("crossing norm outside [0, 1]");
            }
            const double c = std::min(std::max(n, 0.0), 1.0);
            total += std::pow(c, 2.0 * alpha);
        }
    }
    return 6.0 + 2.0 * total;
}

}  // namespace xxzstrip
