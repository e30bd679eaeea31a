#include "trawlsim/text.hpp"

#include <cstdio>

namespace trawlsim {

std::string g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace trawlsim
