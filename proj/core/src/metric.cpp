#include "xxzstrip/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xxzstrip/assignment.hpp"

namespace xxzstrip {

std::int64_t config_distance(const Configuration& x, const Configuration& y) {
    const int n = x.particle_count();
    if (n != y.particle_count())
        throw std::invalid_argument("config_distance needs equal particle counts");
    if (n == 0) return 0;
    std::vector<std::vector<std::int64_t>> cost(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                l1_distance(x.sites()[static_cast<std::size_t>(i)],
                            y.sites()[static_cast<std::size_t>(j)]);
    return solve_assignment(cost);
}

Configuration RectangleSpec::configuration() const {
    std::vector<Vertex> sites;
    sites.reserve(static_cast<std::size_t>(particle_count()));
    for (int c = start_column; c <= end_column(); ++c)
        for (int r = 1; r <= width; ++r) sites.push_back({c, r});
    return Configuration(std::move(sites));
}

bool is_admissible_particle_number(int particle_count, int width) {
    if (width < 1 || particle_count < 1) return false;
    if (particle_count % width != 0) return false;
    return particle_count / width >= width;
}

int rectangle_depth(int particle_count, int width) {
    if (!is_admissible_particle_number(particle_count, width))
        throw std::invalid_argument("particle count " + std::to_string(particle_count) +
                                    " is not admissible for width " + std::to_string(width));
    return particle_count / width;
}

RectDistanceResult rect_distance(const Configuration& x, int width) {
    const int n = x.particle_count();
    const int k = rectangle_depth(n, width);
    RectDistanceResult best{std::numeric_limits<std::int64_t>::max(), 0};
    for (int z = x.min_col() - k; z <= x.max_col() + 1; ++z) {
        const RectangleSpec rect{z, k, width};
        const std::int64_t d = config_distance(x, rect.configuration());
        if (d < best.distance) best = {d, z};
    }
    return best;
}

RectDistanceResult rect_distance(const std::vector<Configuration>& family, int width) {
    if (family.empty()) throw std::invalid_argument("rect_distance of an empty family");
    RectDistanceResult best{std::numeric_limits<std::int64_t>::max(), 0};
    for (const Configuration& x : family) {
        const RectDistanceResult r = rect_distance(x, width);
        if (r.distance < best.distance) best = r;
    }
    return best;
}

std::vector<RectangleSpec> rect_family_V(const SitePotential& v, int particle_count,
                                         ColumnWindow window) {
    const int width = v.geometry().width();
    const int k = rectangle_depth(particle_count, width);
    std::vector<RectangleSpec> result;
    for (int z = window.first; z + k - 1 <= window.last; ++z) {
        const RectangleSpec rect{z, k, width};
        double sum = 0.0;
        for (int c = rect.start_column; c <= rect.end_column(); ++c)
            for (int r = 1; r <= width; ++r) sum += v.at({c, r});
        if (sum < 1.0) result.push_back(rect);
    }
    return result;
}

std::optional<RectDistanceResult> distance_to_rectangles(
    const Configuration& x, const std::vector<RectangleSpec>& rects) {
    std::optional<RectDistanceResult> best;
    for (const RectangleSpec& rect : rects) {
        const std::int64_t d = config_distance(x, rect.configuration());
        if (!best || d < best->distance) best = RectDistanceResult{d, rect.start_column};
    }
    return best;
}

RectDistanceResult rect_V_distance(const Configuration& x, const SitePotential& v) {
    const StripGeometry& geom = v.geometry();
    for (Vertex site : x.sites())
        if (!geom.contains(site))
            throw std::invalid_argument("rect_V_distance expects a configuration on the strip");
    const int k = rectangle_depth(x.particle_count(), geom.width());
    const ColumnWindow window{1 - k, 2 * geom.half_length() + 1};
    const auto family = rect_family_V(v, x.particle_count(), {window.first, window.last + k - 1});
    const auto best = distance_to_rectangles(x, family);
    if (!best)
        throw std::logic_error("certified rectangle window unexpectedly empty");
    return *best;
}

RectDistanceResult rect_V_distance(const std::vector<Configuration>& family,
                                   const SitePotential& v) {
    if (family.empty()) throw std::invalid_argument("rect_V_distance of an empty family");
    std::optional<RectDistanceResult> best;
    for (const Configuration& x : family) {
        const RectDistanceResult r = rect_V_distance(x, v);
        if (!best || r.distance < best->distance) best = r;
    }
    return *best;
}

std::int64_t family_distance(const Configuration& x, int particle_count,
                             const StripGeometry& geom, const RectangleSpec& target) {
    const int j = x.particle_count();
    if (j > particle_count)
        throw std::invalid_argument("family_distance: |X| exceeds the particle count");
    for (Vertex site : x.sites())
        if (geom.in_left_block(site))
            throw std::invalid_argument("family_distance: X must avoid the left block");
    const int left = geom.left_block_size();
    if (particle_count - j > left)
        throw std::invalid_argument("family_distance: not enough left-block sites for Z");
    if (target.particle_count() != particle_count)
        throw std::invalid_argument("family_distance: target size mismatch");
    if (target.width != geom.width())
        throw std::invalid_argument("family_distance: target width mismatch");

    // sources: j particles of X, then the lM sites of Lambda_l
    std::vector<Vertex> sources(x.sites());
    for (int i = 0; i < left; ++i) sources.push_back(geom.vertex(i));
    const int total = j + left;   // == targets + dummies

    const Configuration target_conf = target.configuration();
    std::vector<std::vector<std::int64_t>> cost(
        static_cast<std::size_t>(total), std::vector<std::int64_t>(static_cast<std::size_t>(total), 0));
    for (int t = 0; t < total; ++t) {
        for (int s = 0; s < total; ++s) {
            const bool dummy_target = t >= particle_count;
            const bool x_source = s < j;
            std::int64_t c = 0;
            if (!dummy_target) {
                c = l1_distance(target_conf.sites()[static_cast<std::size_t>(t)],
                                sources[static_cast<std::size_t>(s)]);
            } else if (x_source) {
                c = kForbiddenCost;   // every particle of X must be matched
            }
            cost[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = c;
        }
    }
    const std::int64_t result = solve_assignment(cost);
    if (result >= kForbiddenCost)
        throw std::logic_error("family_distance: no feasible matching");
    return result;
}

RectDistanceResult family_rect_distance(const Configuration& x, int particle_count,
                                        const StripGeometry& geom) {
    const int k = rectangle_depth(particle_count, geom.width());
    int span_lo = 1;
    int span_hi = geom.half_length();
    if (!x.empty()) {
        span_lo = std::min(span_lo, x.min_col());
        span_hi = std::max(span_hi, x.max_col());
    }
    RectDistanceResult best{std::numeric_limits<std::int64_t>::max(), 0};
    for (int z = span_lo - k; z <= span_hi + 1; ++z) {
        const std::int64_t d = family_distance(x, particle_count, geom, {z, k, geom.width()});
        if (d < best.distance) best = {d, z};
    }
    return best;
}

RectDistanceResult family_rect_V_distance(const Configuration& x, int particle_count,
                                          const StripGeometry& geom, const SitePotential& v) {
    const int width = geom.width();
    const int k = rectangle_depth(particle_count, width);
    RectDistanceResult best{std::numeric_limits<std::int64_t>::max(), 0};
    for (int z = 1 - k; z <= 2 * geom.half_length() + 1; ++z) {
        const RectangleSpec rect{z, k, width};
        double sum = 0.0;
        for (int c = rect.start_column; c <= rect.end_column(); ++c)
            for (int r = 1; r <= width; ++r) sum += v.at({c, r});
        if (sum >= 1.0) continue;
        const std::int64_t d = family_distance(x, particle_count, geom, rect);
        if (d < best.distance) best = {d, z};
    }
    return best;
}

std::vector<Configuration> family_members(const Configuration& x, int particle_count,
                                          const StripGeometry& geom) {
    const int j = x.particle_count();
    if (j > particle_count)
        throw std::invalid_argument("family_members: |X| exceeds the particle count");
    for (Vertex site : x.sites())
        if (geom.in_left_block(site))
            throw std::invalid_argument("family_members: X must avoid the left block");
    const int left = geom.left_block_size();
    if (particle_count - j > left)
        throw std::invalid_argument("family_members: not enough left-block sites for Z");

    std::vector<Configuration> members;
    CombinationGen gen(left, particle_count - j);
    std::vector<int> comb;
    if (gen.first(comb)) {
        do {
            std::vector<Vertex> sites(x.sites());
            for (int idx : comb) sites.push_back(geom.vertex(idx));
            members.emplace_back(std::move(sites));
        } while (gen.next(comb));
    }
    return members;
}

double exp_neg_mu_d(double mu, std::optional<std::int64_t> distance) {
    if (!distance) return 0.0;
    return std::exp(-mu * static_cast<double>(*distance));
}

}  // namespace xxzstrip
