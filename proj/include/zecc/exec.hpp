#pragma once

namespace zecc {

// Execution policy for the data-parallel kernels. `serial` is the reference
// path; `parallel` runs the same per-item math under OpenMP. Both paths
// accumulate in integers and derive per-trial randomness from a counter,
// so they produce bit-identical results.
enum class Exec { serial, parallel };

}  // namespace zecc
