// entanglement.hpp - reduced density matrices, entropies, crossing-norm checks
#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "xxzstrip/configuration.hpp"
#include "xxzstrip/hamiltonian.hpp"

namespace xxzstrip {

enum class Side { left, right };

// Reduced density matrix of a sector state over one half of the strip.
// Particle number conservation makes it block diagonal in the local
// particle count.
struct ReducedState {
    int side_sites = 0;                      // lM
    std::map<int, Eigen::MatrixXd> blocks;   // local count j -> C(lM,j)^2 block

    double trace() const;
};

// Partial trace over the complement of `keep`. psi must be unit norm
// (tolerance 1e-10) with one amplitude per basis rank.
ReducedState reduce(const Eigen::VectorXd& psi, const SectorBasis& basis, Side keep);

// All eigenvalues, descending. Throws if any is below -1e-10; values in
// [-1e-10, 0) are clamped to zero.
std::vector<double> reduced_spectrum(const ReducedState& rho);

// Eigenvalues below 1e-14 are treated as exact zeros in the entropies.
double entropy_vn(const ReducedState& rho);              // natural log
double trace_power(const ReducedState& rho, double alpha);
double entropy_renyi(const ReducedState& rho, double alpha);   // alpha > 0, != 1

// ------------------------------------------------------------------
// crossing-norm bound on tr rho^alpha
// ------------------------------------------------------------------

// tr rho^alpha <= 6 + 2 sum_{j} sum_{|X|=j} ||chi_{A_{X,N}} psi||^{2 alpha},
// j running over 1..lM-1. psi must lie in the range of proj (tol 1e-8).
struct CrossingCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double range_residual = 0.0;             // ||P psi - psi||
    std::vector<std::vector<double>> norms_by_j;
    bool pass = false;
};

CrossingCheck renyi_crossing_check(const Eigen::VectorXd& psi, const SectorBasis& basis,
                                   const BandProjector& proj, double alpha);

// ------------------------------------------------------------------
// entropy over a spectral subspace
// ------------------------------------------------------------------

// sup of the half-strip entanglement entropy over unit vectors of the
// band, estimated from the band eigenvectors plus `samples` random unit
// combinations (deterministic in seed). A lower bound on the true sup.
struct EESupEstimate {
    double max_entropy = 0.0;
    std::string argmax;              // "eigvec i" or "sample s"
    Eigen::VectorXd argmax_state;
    int band_rank = 0;
    int samples = 0;
};

EESupEstimate subspace_ee_sup_estimate(const BandProjector& proj, const SectorBasis& basis,
                                       int samples, std::uint64_t seed);

}  // namespace xxzstrip
