#pragma once

#include <string_view>

namespace stylo {

// Bumped whenever the feature definitions, the schema order, or the bundled
// word lists change meaning. Artifacts produced under different versions are
// not comparable and the scoring path refuses to mix them.
inline constexpr std::string_view kSchemaVersion = "stylo.features.62/1";

inline constexpr std::string_view kScalerQuantileConvention = "linear:q*(n-1)";

}  // namespace stylo
