#pragma once

#include <limits>
#include <optional>
#include <string>

namespace transit {

// Time axis: integer minutes since midnight. Runs use sentinel timestamps at
// their endpoints (-inf for the arrival at the first stop, +inf for the
// departure from the last stop); those are serialized as "-inf"/"inf".
using Minute = int;

inline constexpr Minute kNegInf = std::numeric_limits<int>::min() / 4;
inline constexpr Minute kPosInf = std::numeric_limits<int>::max() / 4;

inline bool is_finite(Minute t) { return t > kNegInf && t < kPosInf; }

// Parses "7:55", "07:55", "475", "inf", "+inf" or "-inf".
std::optional<Minute> parse_minute(const std::string& text);

// Formats as H:MM for finite values, "inf"/"-inf" for sentinels.
std::string format_minute(Minute t);

}  // namespace transit
