#pragma once

namespace sostar {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sostar
