// hamiltonian.hpp - sector Hamiltonians, band projectors, crossing norms
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "xxzstrip/bounds.hpp"
#include "xxzstrip/configuration.hpp"
#include "xxzstrip/geometry.hpp"
#include "xxzstrip/metric.hpp"

namespace xxzstrip {

inline constexpr int kDefaultDenseCap = 4000;

// Ising-basis N-particle block: diagonal entries |dX|/2 + sum_{u in X} V(u),
// off-diagonal -1/(2 Delta) between configurations differing by one
// nearest-neighbor hop. Symmetric, positive semidefinite.
Eigen::MatrixXd build_hamiltonian(const SectorBasis& basis, double anisotropy,
                                  const SitePotential& v);

struct SectorSpectrum {
    Eigen::VectorXd eigenvalues;    // ascending
    Eigen::MatrixXd eigenvectors;   // orthonormal columns, same order
    double max_residual = 0.0;      // max_i ||H u_i - lambda_i u_i||
};

// Dense full diagonalization; refuses dimensions above dense_cap.
// Throws if the residual exceeds 1e-9 * ||H||.
SectorSpectrum solve_sector(const Eigen::MatrixXd& h, int dense_cap = kDefaultDenseCap);

// Orthonormal basis of the spectral subspace for eigenvalues in
// [lo - g, hi + g] with guard band g = 1e-12. Rank zero is legal.
struct BandProjector {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<int> eigen_indices;
    Eigen::MatrixXd columns;

    int rank() const { return static_cast<int>(columns.cols()); }
};

BandProjector band_projector(const SectorSpectrum& spec, double lo, double hi);

// Droplet band: eigenvalues in [M/Delta, M/Delta + (M+1-delta)/Delta],
// a window of width (M+1-delta)/Delta sitting on the base point M/Delta.
BandProjector droplet_projector(const SectorSpectrum& spec, int width, double anisotropy,
                                double delta);

// ||chi_A Q||: largest singular value of the row block of the projector
// basis selected by the ranks in `rows`. Always in [0, 1].
double chi_norm(const std::vector<std::size_t>& rows, const BandProjector& proj);

// ------------------------------------------------------------------
// droplet projector locality
// ------------------------------------------------------------------

// Checks ||chi_{A_{X,N}} Q|| <= C exp(-mu d_N(A_{X,N}, R_V^N)) for each
// crossing set X, and d_V >= d_plain. Zero tolerance on both.
struct LocalityRow {
    Configuration x;
    std::uint64_t family_size = 0;
    double norm = 0.0;
    std::int64_t dist_V = 0;
    std::int64_t dist_plain = 0;
    double bound = 0.0;
    double margin = 0.0;   // bound - norm
    bool pass = false;
};

struct LocalityReport {
    DropletConstants constants;
    int band_rank = 0;
    double max_residual = 0.0;
    std::vector<LocalityRow> rows;
    bool all_pass = true;
};

LocalityReport droplet_locality_check(const StripGeometry& geom, double anisotropy,
                                      double delta, const SitePotential& v, int particle_count,
                                      const std::vector<Configuration>& crossing_sets,
                                      std::size_t sector_cap = kDefaultSectorCap,
                                      int dense_cap = kDefaultDenseCap);

}  // namespace xxzstrip
