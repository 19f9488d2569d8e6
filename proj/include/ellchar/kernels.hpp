#pragma once

// Hot loops with an OpenMP implementation and a serial reference.

#include <vector>

#include "ellchar/fingroup.hpp"

namespace ellchar {

enum class Exec { Serial, Parallel };

/// Thread count for the parallel kernels; ELLCHAR_THREADS overrides the
/// OpenMP default when set.
int kernel_threads();

/// Class multiplication coefficients a[(i*k + j)*k + l] =
/// #{x in C_i : x^{-1} g_l in C_j}, with g_l the representative of C_l.
std::vector<long> class_structure_constants(const FinGroup& g, Exec exec);

}  // namespace ellchar
