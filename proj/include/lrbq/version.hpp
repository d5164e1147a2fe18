#pragma once

namespace lrbq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lrbq
