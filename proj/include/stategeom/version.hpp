#pragma once

namespace stategeom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stategeom
