// hamiltonian.cpp
#include "xxzstrip/hamiltonian.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>

namespace xxzstrip {

Eigen::MatrixXd build_hamiltonian(const SectorBasis& basis, double anisotropy,
                                  const SitePotential& v) {
    if (!(anisotropy > 1.0)) throw std::invalid_argument("anisotropy must exceed 1");
    const StripGeometry& geom = basis.geometry();
    const auto dim = static_cast<Eigen::Index>(basis.size());
    const auto edges = geom.edges();
    const double hop = -0.5 / anisotropy;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<char> occ(static_cast<std::size_t>(geom.num_vertices()));
    std::vector<std::int32_t> moved;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto idx = basis.indices(r);
        std::fill(occ.begin(), occ.end(), 0);
        double diag = 0.0;
        for (std::int32_t i : idx) {
            occ[static_cast<std::size_t>(i)] = 1;
            diag += v.at(geom.vertex(i));
        }
        for (const auto& [a, b] : edges) {
            const bool oa = occ[static_cast<std::size_t>(a)];
            const bool ob = occ[static_cast<std::size_t>(b)];
            if (oa == ob) continue;
            diag += 0.5;
            // hop the particle across this boundary edge
            const std::int32_t from = oa ? a : b;
            const std::int32_t to = oa ? b : a;
            moved.assign(idx.begin(), idx.end());
            *std::find(moved.begin(), moved.end(), from) = to;
            std::sort(moved.begin(), moved.end());
            const auto r2 = basis.rank(moved);
            h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r2)) = hop;
        }
        h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) = diag;
    }
    return h;
}

SectorSpectrum solve_sector(const Eigen::MatrixXd& h, int dense_cap) {
    if (h.rows() != h.cols()) throw std::invalid_argument("matrix not square");
    if (h.rows() > dense_cap) throw std::invalid_argument("sector dimension exceeds dense cap");
    SectorSpectrum out;
    if (h.rows() == 0) {
        out.eigenvalues.resize(0);
        out.eigenvectors.resize(0, 0);
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    const Eigen::MatrixXd resid =
        h * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal();
    out.max_residual = resid.colwise().norm().maxCoeff();
    const double scale = std::max({std::abs(out.eigenvalues(0)),
                                   std::abs(out.eigenvalues(out.eigenvalues.size() - 1)), 1.0});
    if (out.max_residual > 1e-9 * scale) throw std::runtime_error("eigensolve residual too large");
    return out;
}

BandProjector band_projector(const SectorSpectrum& spec, double lo, double hi) {
    constexpr double guard = 1e-12;
    BandProjector proj;
    proj.lo = lo;
    proj.hi = hi;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        const double ev = spec.eigenvalues(i);
        if (ev >= lo - guard && ev <= hi + guard) proj.eigen_indices.push_back(static_cast<int>(i));
    }
    proj.columns.resize(spec.eigenvectors.rows(),
                        static_cast<Eigen::Index>(proj.eigen_indices.size()));
    for (std::size_t c = 0; c < proj.eigen_indices.size(); ++c) {
        proj.columns.col(static_cast<Eigen::Index>(c)) =
            spec.eigenvectors.col(proj.eigen_indices[c]);
    }
    return proj;
}

BandProjector droplet_projector(const SectorSpectrum& spec, int width, double anisotropy,
                                double delta) {
    if (!(anisotropy > 1.0)) throw std::invalid_argument("anisotropy must exceed 1");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    // band of width (M+1-delta)/Delta above the base point M/Delta; the
    // interval degenerates at delta = M+1 and is reversed (rank 0) beyond
    const double lo = width / anisotropy;
    const double hi = lo + (width + 1.0 - delta) / anisotropy;
    return band_projector(spec, lo, hi);
}

double chi_norm(const std::vector<std::size_t>& rows, const BandProjector& proj) {
    if (rows.empty() || proj.rank() == 0) return 0.0;
    Eigen::MatrixXd block(static_cast<Eigen::Index>(rows.size()), proj.columns.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        block.row(static_cast<Eigen::Index>(i)) =
            proj.columns.row(static_cast<Eigen::Index>(rows[i]));
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(block);
    const double top = svd.singularValues()(0);
    return std::clamp(top, 0.0, 1.0);
}

LocalityReport droplet_locality_check(const StripGeometry& geom, double anisotropy,
                                      double delta, const SitePotential& v, int particle_count,
                                      const std::vector<Configuration>& crossing_sets,
                                      std::size_t sector_cap, int dense_cap) {
    if (!is_admissible_particle_number(particle_count, geom.width()))
        throw std::invalid_argument("inadmissible particle number");
    LocalityReport report;
    report.constants = droplet_constants(geom.width(), delta, anisotropy);

    const SectorBasis basis = enumerate_sector(geom, particle_count, sector_cap);
    const SectorSpectrum spec = solve_sector(build_hamiltonian(basis, anisotropy, v), dense_cap);
    const BandProjector proj = droplet_projector(spec, geom.width(), anisotropy, delta);
    report.band_rank = proj.rank();
    report.max_residual = spec.max_residual;

    for (const Configuration& x : crossing_sets) {
        LocalityRow row;
        row.x = x;
        const auto members = family_members(x, particle_count, geom);
        row.family_size = members.size();
        std::vector<std::size_t> ranks;
        ranks.reserve(members.size());
        for (const Configuration& m : members) ranks.push_back(basis.rank_of(m));
        row.norm = chi_norm(ranks, proj);
        row.dist_V = family_rect_V_distance(x, particle_count, geom, v).distance;
        row.dist_plain = family_rect_distance(x, particle_count, geom).distance;
        row.bound = report.constants.C *
                    std::exp(-report.constants.mu * static_cast<double>(row.dist_V));
        row.margin = row.bound - row.norm;
        row.pass = row.norm <= row.bound && row.dist_V >= row.dist_plain;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace xxzstrip
