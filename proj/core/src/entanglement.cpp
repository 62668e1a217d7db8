// entanglement.cpp
#include "xxzstrip/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xxzstrip/bounds.hpp"
#include "xxzstrip/rng.hpp"

namespace xxzstrip {

namespace {
constexpr double kEigZero = 1e-14;
constexpr double kPsdTol = 1e-10;
}  // namespace

double ReducedState::trace() const {
    double t = 0.0;
    for (const auto& [j, block] : blocks) t += block.trace();
    return t;
}

ReducedState reduce(const Eigen::VectorXd& psi, const SectorBasis& basis, Side keep) {
    if (static_cast<std::size_t>(psi.size()) != basis.size())
        throw std::invalid_argument("state dimension does not match the sector");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("state must be unit norm");

    const StripGeometry& geom = basis.geometry();
    const int half = geom.left_block_size();
    const int particles = basis.particle_count();
    const int j_min = std::max(0, particles - half);
    const int j_max = std::min(particles, half);

    std::vector<CombinationRanker> rankers;   // local count -> ranker on lM sites
    rankers.reserve(static_cast<std::size_t>(particles) + 1);
    for (int j = 0; j <= particles; ++j)
        rankers.emplace_back(half, std::min(j, half));

    // bucket amplitudes by the traced-out part; each bucket contributes an
    // outer product to the block of its kept-side particle count
    std::map<std::pair<int, std::uint64_t>, std::vector<std::pair<std::uint64_t, double>>>
        buckets;
    std::vector<std::int32_t> kept, other;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const double amp = psi(static_cast<Eigen::Index>(r));
        if (amp == 0.0) continue;
        kept.clear();
        other.clear();
        for (std::int32_t i : basis.indices(r)) {
            const bool left = i < half;
            const std::int32_t local = left ? i : i - static_cast<std::int32_t>(half);
            if (left == (keep == Side::left)) {
                kept.push_back(local);
            } else {
                other.push_back(local);
            }
        }
        const int jk = static_cast<int>(kept.size());
        const int jo = particles - jk;
        buckets[{jk, rankers[static_cast<std::size_t>(jo)].rank(other)}].push_back(
            {rankers[static_cast<std::size_t>(jk)].rank(kept), amp});
    }

    ReducedState rho;
    rho.side_sites = half;
    for (int j = j_min; j <= j_max; ++j) {
        const auto dim = static_cast<Eigen::Index>(rankers[static_cast<std::size_t>(j)].count());
        rho.blocks[j] = Eigen::MatrixXd::Zero(dim, dim);
    }
    for (const auto& [key, entries] : buckets) {
        Eigen::MatrixXd& block = rho.blocks.at(key.first);
        for (const auto& [ra, va] : entries)
            for (const auto& [rb, vb] : entries)
                block(static_cast<Eigen::Index>(ra), static_cast<Eigen::Index>(rb)) += va * vb;
    }
    return rho;
}

std::vector<double> reduced_spectrum(const ReducedState& rho) {
    std::vector<double> spectrum;
    for (const auto& [j, block] : rho.blocks) {
        if (block.rows() == 0) continue;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block,
                                                              Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("reduced block eigensolve failed");
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
            const double ev = solver.eigenvalues()(i);
            if (ev < -kPsdTol) throw std::runtime_error("reduced state is not PSD");
            spectrum.push_back(std::max(ev, 0.0));
        }
    }
    std::sort(spectrum.rbegin(), spectrum.rend());
    return spectrum;
}

double entropy_vn(const ReducedState& rho) {
    double s = 0.0;
    for (double ev : reduced_spectrum(rho)) {
        if (ev <= kEigZero) break;   // descending order
        s -= ev * std::log(ev);
    }
    return s;
}

double trace_power(const ReducedState& rho, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    double t = 0.0;
    for (double ev : reduced_spectrum(rho)) {
        if (ev <= kEigZero) break;
        t += std::pow(ev, alpha);
    }
    return t;
}

double entropy_renyi(const ReducedState& rho, double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0)
        throw std::invalid_argument("alpha must be positive and != 1");
    return std::log(trace_power(rho, alpha)) / (1.0 - alpha);
}

CrossingCheck renyi_crossing_check(const Eigen::VectorXd& psi, const SectorBasis& basis,
                                   const BandProjector& proj, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    if (static_cast<std::size_t>(psi.size()) != basis.size())
        throw std::invalid_argument("state dimension does not match the sector");

    CrossingCheck out;
    out.range_residual = (proj.columns * (proj.columns.transpose() * psi) - psi).norm();
    if (out.range_residual > 1e-8)
        throw std::invalid_argument("state does not lie in the projector range");

    const StripGeometry& geom = basis.geometry();
    const int half = geom.left_block_size();
    const int particles = basis.particle_count();

    // squared norms ||chi_{A_{X,N}} psi||^2, keyed by the right part X
    std::vector<CombinationRanker> rankers;
    for (int j = 0; j <= std::min(particles, half); ++j) rankers.emplace_back(half, j);
    std::map<std::pair<int, std::uint64_t>, double> sq;
    std::vector<std::int32_t> right;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const double amp = psi(static_cast<Eigen::Index>(r));
        if (amp == 0.0) continue;
        right.clear();
        for (std::int32_t i : basis.indices(r))
            if (i >= half) right.push_back(i - static_cast<std::int32_t>(half));
        const int j = static_cast<int>(right.size());
        if (j < 1 || j > half - 1) continue;   // absorbed by the additive constant
        sq[{j, rankers[static_cast<std::size_t>(j)].rank(right)}] += amp * amp;
    }

    out.norms_by_j.assign(static_cast<std::size_t>(half), {});
    for (const auto& [key, s] : sq)
        out.norms_by_j[static_cast<std::size_t>(key.first)].push_back(std::sqrt(s));

    out.lhs = trace_power(reduce(psi, basis, Side::right), alpha);
    out.rhs = crossing_norm_cap(out.norms_by_j, alpha);
    out.pass = out.lhs <= out.rhs;
    return out;
}

EESupEstimate subspace_ee_sup_estimate(const BandProjector& proj, const SectorBasis& basis,
                                       int samples, std::uint64_t seed) {
    if (proj.rank() == 0) throw std::invalid_argument("empty band has no states");
    if (samples < 0) throw std::invalid_argument("negative sample count");

    EESupEstimate out;
    out.band_rank = proj.rank();
    out.samples = samples;
    out.max_entropy = -1.0;

    auto consider = [&](const Eigen::VectorXd& psi, const std::string& label) {
        const double ee = entropy_vn(reduce(psi, basis, Side::right));
        if (ee > out.max_entropy) {
            out.max_entropy = ee;
            out.argmax = label;
            out.argmax_state = psi;
        }
    };

    for (int i = 0; i < proj.rank(); ++i)
        consider(proj.columns.col(i), "eigvec " + std::to_string(i));

    const int r = proj.rank();
    for (int s = 0; s < samples; ++s) {
        PortableRng rng(mix64(seed, static_cast<std::uint64_t>(s)));
        Eigen::VectorXd coeff(r);
        for (int i = 0; i < r; ++i) coeff(i) = rng.next_normal();
        coeff.normalize();
        Eigen::VectorXd psi = proj.columns * coeff;
        psi.normalize();
        consider(psi, "sample " + std::to_string(s));
    }
    return out;
}

}  // namespace xxzstrip
