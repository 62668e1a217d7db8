// levels.cpp
#include "xxzstrip/levels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace xxzstrip {

// ------------------------------------------------------------------
// level function
// ------------------------------------------------------------------

// Rows never contribute: every column of the strip meets the boundary
// columns a and b in all rows, so the nearest boundary site of (c, r)
// sits in the same row. The distance is purely horizontal.
int internal_boundary_distance(const RectangleSpec& rect, Vertex v) {
    const int a = rect.start_column;
    const int b = rect.end_column();
    return std::min(std::abs(v.col - a), std::abs(v.col - b));
}

int level_of(const RectangleSpec& rect, Vertex v) {
    const int d = internal_boundary_distance(rect, v);
    return rect.contains(v) ? -d : d;
}

// ------------------------------------------------------------------
// level-respecting enumeration
// ------------------------------------------------------------------

LevelStructure level_structure(const RectangleSpec& rect, ColumnWindow window) {
    if (window.first > rect.start_column || window.last < rect.end_column()) {
        throw std::invalid_argument("window does not cover the rectangle");
    }
    LevelStructure out;
    out.rectangle = rect;
    out.window = window;
    out.enumeration = window_sites(window, rect.width);
    std::stable_sort(out.enumeration.begin(), out.enumeration.end(),
                     [&rect](Vertex p, Vertex q) {
                         const int lp = level_of(rect, p);
                         const int lq = level_of(rect, q);
                         if (lp != lq) return lp < lq;
                         if (p.col != q.col) return p.col < q.col;
                         return p.row < q.row;
                     });
    out.levels.reserve(out.enumeration.size());
    for (Vertex v : out.enumeration) out.levels.push_back(level_of(rect, v));
    return out;
}

int level_prefix_in_window(const RectangleSpec& rect, ColumnWindow window) {
    if (window.first > rect.start_column || window.last < rect.end_column()) {
        throw std::invalid_argument("window does not cover the rectangle");
    }
    const int a = rect.start_column;
    const int b = rect.end_column();
    // Walk global level sets in increasing order. Once any site of the
    // current level falls outside the window the prefix stops there: the
    // enumeration visits (level, col, row) in sorted order.
    int count = 0;
    const int deepest = -((rect.depth - 1) / 2);
    for (int lv = deepest;; ++lv) {
        std::vector<int> cols;
        if (lv <= 0) {
            // columns of R at boundary distance -lv
            const int left = a - lv;
            const int right = b + lv;
            if (left > right) continue;   // level set empty inside a short rectangle
            cols.push_back(left);
            if (right != left) cols.push_back(right);
        } else {
            cols.push_back(a - lv);
            cols.push_back(b + lv);
        }
        for (int c : cols) {
            if (!window.contains_col(c)) return count;
            count += rect.width;
        }
    }
}

// ------------------------------------------------------------------
// boundary-distance lower bound for the assignment distance
// ------------------------------------------------------------------

std::int64_t boundary_distance_lower(const Configuration& x, const RectangleSpec& rect) {
    std::int64_t total = 0;
    for (Vertex v : x.sites()) {
        if (!rect.contains(v)) total += internal_boundary_distance(rect, v);
    }
    const Configuration r_conf = rect.configuration();
    for (Vertex v : r_conf.sites()) {
        if (!x.contains(v)) total += internal_boundary_distance(rect, v);
    }
    return total;
}

}  // namespace xxzstrip
