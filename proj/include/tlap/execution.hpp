#pragma once

namespace tlap {

// Kernels that loop over independent grid points come in two flavours: the
// serial reference loop and an OpenMP loop. Both produce identical results.
enum class Exec { serial, parallel };

int max_threads();

}  // namespace tlap
