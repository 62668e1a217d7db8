#pragma once

namespace xxzstrip {
inline constexpr const char* kVersionTag = "xxzstrip 0.1.0";
}
