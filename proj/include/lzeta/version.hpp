#pragma once

namespace lzeta {

inline constexpr const char *kVersion = "1.0.0";

} // namespace lzeta
