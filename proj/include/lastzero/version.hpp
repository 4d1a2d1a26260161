#pragma once

namespace lastzero {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lastzero
