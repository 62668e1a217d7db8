// levels.hpp - level function of a rectangle and level-respecting enumerations
#pragma once

#include <vector>

#include "xxzstrip/configuration.hpp"
#include "xxzstrip/metric.hpp"

namespace xxzstrip {

// d(x, in-boundary of R); the boundary is the first and last column of R.
int internal_boundary_distance(const RectangleSpec& rect, Vertex v);

// Signed distance to the internal boundary: negative on R, positive off R.
int level_of(const RectangleSpec& rect, Vertex v);

// Level-respecting enumeration of a window: sites ordered by level,
// ties broken lexicographically by (col, row).
struct LevelStructure {
    RectangleSpec rectangle;
    ColumnWindow window;
    std::vector<Vertex> enumeration;
    std::vector<int> levels;   // levels[i] == level_of(rectangle, enumeration[i])
};

LevelStructure level_structure(const RectangleSpec& rect, ColumnWindow window);

// Largest T such that the first T entries of the level enumeration of the
// whole infinite strip lie inside the window. Any configuration with a
// particle outside the window therefore uses an enumeration index > T.
int level_prefix_in_window(const RectangleSpec& rect, ColumnWindow window);

// Boundary-distance lower bound: sum of boundary distances of the particles
// of X outside R plus those of the holes R \ X. Always <= d_N(X, R).
std::int64_t boundary_distance_lower(const Configuration& x, const RectangleSpec& rect);

}  // namespace xxzstrip
