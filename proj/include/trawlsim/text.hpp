#pragma once

#include <string>

namespace trawlsim {

// Formats a double with 6 significant digits ("%.6g"), independent of any
// locale the host process might have picked up.
std::string g6(double v);

}  // namespace trawlsim
