#pragma once

#include <vector>

namespace bombprize::classical {

/// Capacity in bits of a discrete memoryless channel given as a
/// column-stochastic matrix w[y][x]. Blahut-Arimoto with the usual
/// upper/lower capacity bracket; stops when the bracket closes below 1e-9
/// or at 1e5 iterations, which lands the result well inside 1e-8.
double blahut_arimoto(const std::vector<std::vector<double>>& w);

}  // namespace bombprize::classical
