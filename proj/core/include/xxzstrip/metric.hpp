// metric.hpp - configuration metric d_N, rectangular families, A_{X,N} distances
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xxzstrip/configuration.hpp"
#include "xxzstrip/geometry.hpp"

namespace xxzstrip {

// d_N(X,Y): minimum total l1 transport cost over particle matchings.
// Exact (integer min-cost assignment). Requires |X| = |Y|.
std::int64_t config_distance(const Configuration& x, const Configuration& y);

// Rectangular configuration R_i^N = {i..i+k-1} x {1..M} on the infinite strip.
struct RectangleSpec {
    int start_column = 1;
    int depth = 1;   // k
    int width = 1;   // M

    int particle_count() const { return depth * width; }
    int end_column() const { return start_column + depth - 1; }
    bool contains(Vertex v) const {
        return v.col >= start_column && v.col <= end_column() && v.row >= 1 && v.row <= width;
    }
    RectangleSpec shifted(int z) const { return {start_column + z, depth, width}; }
    Configuration configuration() const;
};

// Admissible particle numbers: N = kM with k >= M.
bool is_admissible_particle_number(int particle_count, int width);
int rectangle_depth(int particle_count, int width);   // k = N/M, throws if inadmissible

struct RectDistanceResult {
    std::int64_t distance = 0;
    int argmin_shift = 0;   // start column of a minimizing rectangle
};

// d_N(X, R^N) = min_z d_N(X, R+z). The scan window [min_col-k, max_col+1]
// is exact: a rectangle sharing no column with the span of X is dominated
// by sliding it one column toward X (cost drops by N per column).
RectDistanceResult rect_distance(const Configuration& x, int width);
RectDistanceResult rect_distance(const std::vector<Configuration>& family, int width);

// Rectangles R with R inside the window and sum_{x in R} V(x) < 1.
// V is the strip potential extended by zero outside the finite strip.
std::vector<RectangleSpec> rect_family_V(const SitePotential& v, int particle_count,
                                         ColumnWindow window);

// min over a rectangle list; empty list -> nullopt (distance +infinity).
std::optional<RectDistanceResult> distance_to_rectangles(
    const Configuration& x, const std::vector<RectangleSpec>& rects);

// Exact d_N(X, R_V^N) over the infinite strip: the certified scan window
// [1-k, 2l+1] always contains a minimizing small-potential rectangle
// because rectangles beyond the strip carry zero potential. X must lie
// inside the finite strip.
RectDistanceResult rect_V_distance(const Configuration& x, const SitePotential& v);
RectDistanceResult rect_V_distance(const std::vector<Configuration>& family,
                                   const SitePotential& v);

// d_N(A_{X,N}, target) with A_{X,N} = {X u Z : Z subset of Lambda_l,
// |X|+|Z| = N}: min over Z of d_N(X u Z, target), computed exactly as one
// assignment where each target site takes either a particle of X or a
// distinct free source in Lambda_l (unused Lambda sites go to zero-cost
// dummy targets; X particles may not).
std::int64_t family_distance(const Configuration& x, int particle_count,
                             const StripGeometry& geom, const RectangleSpec& target);

// min over z of family_distance(X, N, geom, target+z), exact by the same
// span-window argument as rect_distance.
RectDistanceResult family_rect_distance(const Configuration& x, int particle_count,
                                        const StripGeometry& geom);

// d_N(A_{X,N}, R_V^N): additionally restricted to small-potential
// rectangles. Never infinite: rectangles beyond the strip carry zero
// potential and always qualify.
RectDistanceResult family_rect_V_distance(const Configuration& x, int particle_count,
                                          const StripGeometry& geom, const SitePotential& v);

// The members of A_{X,N} themselves, in canonical order.
std::vector<Configuration> family_members(const Configuration& x, int particle_count,
                                          const StripGeometry& geom);

double exp_neg_mu_d(double mu, std::optional<std::int64_t> distance);

}  // namespace xxzstrip
