#include "xxzstrip/geometry.hpp"

namespace xxzstrip {

StripGeometry::StripGeometry(int half_length, int width)
    : half_length_(half_length), width_(width) {
    if (half_length < 1) throw std::invalid_argument("strip half_length must be >= 1");
    if (width < 1) throw std::invalid_argument("strip width must be >= 1");
}

Vertex StripGeometry::vertex(int index) const {
    if (index < 0 || index >= num_vertices())
        throw std::invalid_argument("vertex index out of range");
    return Vertex{index / width_ + 1, index % width_ + 1};
}

int StripGeometry::index(Vertex v) const {
    if (!contains(v))
        throw std::invalid_argument("vertex (" + std::to_string(v.col) + "," +
                                    std::to_string(v.row) + ") outside the strip");
    return (v.col - 1) * width_ + (v.row - 1);
}

std::vector<std::pair<int, int>> StripGeometry::edges() const {
    std::vector<std::pair<int, int>> result;
    const int cols = 2 * half_length_;
    result.reserve(static_cast<std::size_t>((cols - 1) * width_ + cols * (width_ - 1)));
    for (int c = 1; c <= cols; ++c) {
        for (int r = 1; r <= width_; ++r) {
            const int i = index({c, r});
            if (r < width_) result.emplace_back(i, index({c, r + 1}));
            if (c < cols) result.emplace_back(i, index({c + 1, r}));
        }
    }
    return result;
}

int StripGeometry::degree(Vertex v) const {
    if (!contains(v)) throw std::invalid_argument("degree of vertex outside the strip");
    int deg = 0;
    for (Vertex u : {Vertex{v.col - 1, v.row}, Vertex{v.col + 1, v.row},
                     Vertex{v.col, v.row - 1}, Vertex{v.col, v.row + 1}}) {
        if (contains(u)) ++deg;
    }
    return deg;
}

StripGeometry build_strip(int half_length, int width) {
    return StripGeometry(half_length, width);
}

std::vector<Vertex> window_sites(ColumnWindow w, int width) {
    if (width < 1) throw std::invalid_argument("window width must be >= 1");
    std::vector<Vertex> sites;
    sites.reserve(static_cast<std::size_t>(w.columns()) * width);
    for (int c = w.first; c <= w.last; ++c)
        for (int r = 1; r <= width; ++r) sites.push_back({c, r});
    return sites;
}

SitePotential::SitePotential(StripGeometry geom)
    : geom_(geom), values_(static_cast<std::size_t>(geom.num_vertices()), 0.0) {}

SitePotential::SitePotential(StripGeometry geom, std::vector<double> values)
    : geom_(geom), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(geom_.num_vertices()))
        throw std::invalid_argument("potential value count does not match the strip");
    for (double v : values_)
        if (v < 0.0) throw std::invalid_argument("potential must be nonnegative");
}

SitePotential SitePotential::constant(const StripGeometry& geom, double c) {
    if (c < 0.0) throw std::invalid_argument("potential must be nonnegative");
    return SitePotential(geom, std::vector<double>(static_cast<std::size_t>(geom.num_vertices()), c));
}

SitePotential SitePotential::shifted(double c) const {
    std::vector<double> vals = values_;
    for (double& v : vals) v += c;
    return SitePotential(geom_, std::move(vals));
}

}  // namespace xxzstrip
