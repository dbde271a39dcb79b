#pragma once

namespace hypersurf {

inline constexpr const char* version = "0.1.0";

}  // namespace hypersurf
