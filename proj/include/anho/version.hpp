#pragma once

namespace anho {
inline constexpr const char* kVersion = "0.1.0";
}
