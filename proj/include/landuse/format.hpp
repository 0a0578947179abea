#pragma once

#include <charconv>
#include <string>

namespace landuse {

// Shortest decimal form that round-trips to the same double; infinities come
// out as "inf"/"-inf" to match the config syntax.
inline std::string format_full(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace landuse
