#pragma once

namespace regrasp {

// Execution mode for the data-parallel sweeps. `parallel` runs the OpenMP
// kernels; `serial` runs the plain reference loops kept for testing and
// benchmarking. Both produce bit-identical results.
enum class Exec { serial, parallel };

int hardware_threads();

}  // namespace regrasp
