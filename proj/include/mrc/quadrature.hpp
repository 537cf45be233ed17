#pragma once

#include <functional>

#include "mrc/core.hpp"

namespace mrc {

/// Integrates f over (a, b) with per-cell Gauss-Legendre panels on a uniform
/// grid of `cells` interior cells, the first and last cell refined
/// geometrically toward the endpoint so that integrable endpoint
/// singularities converge.  Throws IntegrabilityError when the graded tail
/// fails to decay (divergent integral at the detection resolution).
double integrate_open(const std::function<double(double)>& f, double a, double b, int cells);

} // namespace mrc
