#pragma once

namespace opdi {

// Kernels with an OpenMP fan-out keep a serial path with identical results.
enum class Execution { Serial, Parallel };

}  // namespace opdi
