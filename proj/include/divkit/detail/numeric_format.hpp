#pragma once

#include <cstdio>
#include <string>

namespace divkit::detail {

/// 17 significant digits: enough to round-trip any 64-bit double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace divkit::detail
