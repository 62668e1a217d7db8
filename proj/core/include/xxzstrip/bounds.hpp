// bounds.hpp - closed-form constants and certified partial evaluations of
// the droplet bounds: tunneling constants, the configuration sum
// f(R, mu) = sum_X exp(-mu d_N(X, R)), and the volume / disorder caps.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "xxzstrip/geometry.hpp"
#include "xxzstrip/levels.hpp"
#include "xxzstrip/metric.hpp"

namespace xxzstrip {

// ------------------------------------------------------------------
// constants
// ------------------------------------------------------------------

// Locality constants of the droplet projector bound
//   ||chi_{A,N} Q| | <= C exp(-mu d_N(A, R_V^N)).
struct DropletConstants {
    int width = 1;           // M
    double delta = 1.0;      // spectral margin in (0, 1]... (0, M+1) allowed
    double anisotropy = 1.0; // Delta > 1
    double C = 0.0;
    double mu = 0.0;
};

DropletConstants droplet_constants(int width, double delta, double anisotropy);

// Random-field extension: lambda = E[exp(-mu min(nu, 1))] for the
// thresholded field, C_tilde absorbs the threshold depth k.
struct DisorderConstants {
    double p = 0.0;      // P(nu >= 1/k)
    int k = 1;           // threshold depth
    double lambda = 1.0; // 1 - p + p exp(-mu)
    double C_tilde = 0.0;
};

DisorderConstants disorder_constants(const DropletConstants& dc, double p, int k);

// ------------------------------------------------------------------
// the configuration sum f(R, mu)
// ------------------------------------------------------------------

// Closed upper bound, independent of the rectangle and of N:
//   f(R, mu) <= (1 + 2M/mu) exp(4M/mu).
double fsum_cap(int width, double mu);
double log_fsum_cap(int width, double mu);

// Histogram of d_N(X, R) over all N-particle configurations inside a
// window covering R. Key: distance, value: count.
using DistanceHistogram = std::map<std::int64_t, std::uint64_t>;

inline constexpr std::uint64_t kDefaultEnumCap = 20'000'000;

DistanceHistogram rect_distance_histogram(const RectangleSpec& rect, ColumnWindow window,
                                          std::uint64_t enum_cap = kDefaultEnumCap);

// Certified bracket of the infinite sum: lower is the exact truncated sum,
// upper adds a tail bound derived from the level enumeration. level_prefix
// is the largest T with e_1..e_T inside the window; any configuration with
// a particle outside the window occupies an enumeration index > T.
struct FsumInterval {
    double lower = 0.0;
    double upper = 0.0;
    int level_prefix = 0;
    std::uint64_t config_count = 0;
};

// Tail of f over configurations not contained in the first `level_prefix`
// enumeration sites. Decreasing in level_prefix, -> 0 as it grows.
double fsum_tail_bound(int particles, int width, double mu, int level_prefix);

FsumInterval fsum_from_histogram(const DistanceHistogram& hist, const RectangleSpec& rect,
                                 double mu, ColumnWindow window);

FsumInterval fsum_truncated(const RectangleSpec& rect, double mu, ColumnWindow window,
                            std::uint64_t enum_cap = kDefaultEnumCap);

// ------------------------------------------------------------------
// family sums over crossing sets
// ------------------------------------------------------------------

// Exact evaluation of  sum_{X subset right-half, |X| = j} exp(-mu d_N(A_{X,N}, R^N))
// against its cap  8 f(R, mu/2) / (1 - exp(-mu/2)).  The f factor is
// reported as a certified bracket; pass compares against its upper end,
// the sound side since the cap itself sits above the full f.
struct FamilyFsumCheck {
    double lhs = 0.0;
    double rhs_lower = 0.0;
    double rhs_upper = 0.0;
    std::uint64_t family_count = 0;
    bool pass = false;
};

FamilyFsumCheck family_fsum_check(const StripGeometry& geom, int particles, int j, double mu,
                                  ColumnWindow fsum_window);

// ------------------------------------------------------------------
// entropy caps
// ------------------------------------------------------------------

// Volume-independent cap on the alpha-Renyi entropy of a droplet state,
// valid for alpha in (0, 1), at fixed half-length ell.
double renyi_volume_cap(double alpha, int ell, const DropletConstants& dc);

// Disorder-averaged constant K_alpha and the expectation cap 2 log K_{1/2}.
double disorder_log_K(double alpha, const DropletConstants& dc, const DisorderConstants& xc);
double disorder_K(double alpha, const DropletConstants& dc, const DisorderConstants& xc);
double ee_expectation_cap(const DropletConstants& dc, const DisorderConstants& xc);

// RHS of the crossing-norm trace bound:
//   tr rho^alpha <= 6 + 2 sum_j sum_X ||chi_{A_{X,N}} psi||^{2 alpha}.
// norms_by_j[j] holds the norms for |X| = j; entries must lie in [0, 1]
// up to 1e-9.
double crossing_norm_cap(const std::vector<std::vector<double>>& norms_by_j, double alpha);

}  // namespace xxzstrip
