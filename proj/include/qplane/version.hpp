#pragma once

namespace qplane {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace qplane
