// geometry.hpp - strip lattice {1..2l}x{1..M}, column windows, l1 metric
#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace xxzstrip {

// Site of the (possibly infinite) strip. Columns range over Z in window
// contexts; rows always live in 1..M.
struct Vertex {
    int col = 0;
    int row = 0;
    auto operator<=>(const Vertex&) const = default;
};

inline int l1_distance(Vertex x, Vertex y) {
    return std::abs(x.col - y.col) + std::abs(x.row - y.row);
}

// Inclusive column range [first, last]; sites are {first..last} x {1..M}.
struct ColumnWindow {
    int first = 0;
    int last = -1;

    int columns() const { return last >= first ? last - first + 1 : 0; }
    bool contains_col(int c) const { return c >= first && c <= last; }
    bool contains(Vertex v) const { return contains_col(v.col); }
    std::string to_string() const {
        return "[" + std::to_string(first) + "," + std::to_string(last) + "]";
    }
};

// Finite strip of length 2l and width M with nearest-neighbor edges.
// Vertices are ordered column-major: index = (col-1)*M + (row-1).
class StripGeometry {
public:
    StripGeometry(int half_length, int width);

    int half_length() const { return half_length_; }
    int width() const { return width_; }
    int num_vertices() const { return 2 * half_length_ * width_; }
    int left_block_size() const { return half_length_ * width_; }

    bool contains(Vertex v) const {
        return v.col >= 1 && v.col <= 2 * half_length_ && v.row >= 1 && v.row <= width_;
    }
    // Left block Lambda_l = {1..l} x {1..M}.
    bool in_left_block(Vertex v) const { return contains(v) && v.col <= half_length_; }

    Vertex vertex(int index) const;
    int index(Vertex v) const;      // throws if v outside the strip

    // Edge set {u,v} with |u-v|_1 = 1, as index pairs with first < second.
    std::vector<std::pair<int, int>> edges() const;
    int degree(Vertex v) const;

    ColumnWindow full_window() const { return {1, 2 * half_length_}; }

private:
    int half_length_;
    int width_;
};

StripGeometry build_strip(int half_length, int width);

// Sites of a column window in canonical (col, row) order.
std::vector<Vertex> window_sites(ColumnWindow w, int width);

// Nonnegative potential on the finite strip, extended by zero outside.
class SitePotential {
public:
    explicit SitePotential(StripGeometry geom);
    SitePotential(StripGeometry geom, std::vector<double> values);

    static SitePotential zero(const StripGeometry& geom) { return SitePotential(geom); }
    static SitePotential constant(const StripGeometry& geom, double c);

    const StripGeometry& geometry() const { return geom_; }
    double at(Vertex v) const {
        return geom_.contains(v) ? values_[static_cast<std::size_t>(geom_.index(v))] : 0.0;
    }
    double& value_at(Vertex v) { return values_[static_cast<std::size_t>(geom_.index(v))]; }
    const std::vector<double>& values() const { return values_; }

    SitePotential shifted(double c) const;   // V + c on every strip site

private:
    StripGeometry geom_;
    std::vector<double> values_;
};

}  // namespace xxzstrip
