// assignment.hpp - exact min-cost bipartite assignment on integer costs
#pragma once

#include <cstdint>
#include <vector>

namespace xxzstrip {

// Entries >= kForbiddenCost mark pairs the matching must avoid.
inline constexpr std::int64_t kForbiddenCost = static_cast<std::int64_t>(1) << 40;

// Kuhn-Munkres with potentials on an n x n integer matrix. Returns the
// minimum total cost; row_to_col (if given) receives the matched column
// of each row. Integer arithmetic throughout, so results are exact.
std::int64_t solve_assignment(const std::vector<std::vector<std::int64_t>>& cost,
                              std::vector<int>* row_to_col = nullptr);

}  // namespace xxzstrip
