#pragma once

#include <cstdio>
#include <string>

namespace lhs {

// 17 significant digits so reruns are byte-comparable.
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace lhs
