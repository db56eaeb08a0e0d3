#pragma once

#include <string_view>

namespace detcert {

inline constexpr std::string_view kToolName = "detcert";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace detcert
