#pragma once

namespace dsq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dsq
