#pragma once

namespace bicsim {

inline constexpr const char* version = "0.1.0";

} // namespace bicsim
