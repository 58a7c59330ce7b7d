#pragma once

namespace ricci {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ricci
