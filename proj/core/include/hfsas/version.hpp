#pragma once

namespace hfsas {

inline constexpr const char* version = "1.0.0";

} // namespace hfsas
