#pragma once

namespace doe {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace doe
