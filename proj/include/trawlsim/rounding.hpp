#pragma once

namespace trawlsim {

// Arithmetic mode shared by the capacity and river-yield chains.
//
// Paper mode keeps the intermediate rounding steps of the published figures
// so those numbers reproduce digit-for-digit; Exact mode carries full double
// precision end to end.
enum class RoundMode { Paper, Exact };

}  // namespace trawlsim
