#pragma once

#include <functional>

#include "mrc/core.hpp"

namespace mrc {

/// Positive radius profile rho on an interval, sampled on a uniform grid of
/// candidate nodes (default 4096 cells).
struct RhoProfile {
    Interval interval;
    std::function<double(double)> eval;
    int grid_m = 4096;

    RhoProfile(Interval iv, std::function<double(double)> f, int grid_m = 4096);

    /// Values at the grid nodes; throws if any sampled value is <= 0.
    std::vector<double> sampled() const;
};

/// Constructive 1-D Besicovitch covering: greedy left-to-right ball cover
/// over the grid candidates (among centers t with t - rho(t) <= frontier,
/// pick the reach maximizer t + rho(t); leftmost on ties), followed by a
/// nonoverlap verification and the midpoint placement
/// tau_i = (t_{i+1} + t_i)/2 + (rho(t_i) - rho(t_{i+1}))/2, feasibility-
/// clamped so the Subdivision inequalities hold.
/// Throws CoveringError naming the stall time when no candidate advances.
Subdivision besicovitch_cover(const RhoProfile& rho);

/// Markov-inequality uniform covering: computes eps0 = ||1/rho||_{L^r(I)}^{-r*}
/// and covers with constant-radius eps0 balls centered inside
/// E_eps0 = {rho > eps0}, spacings in [eps0, 2 eps0].  The returned
/// Subdivision carries rho_at_centers = eps0.  Throws ResolutionError when
/// E_eps0 is not eps0-dense at the sampling resolution.
Subdivision uniform_cover(const RhoProfile& rho, double r);

struct NBounds {
    long n_min;
    long n_max;
    double lr_norm; // ||1/rho||_{L^r(I)}
    double eps0;    // lr_norm^{-r*}
};

/// Explicit covering-count bounds
///   n_min = ceil(|I| ||1/rho||^{r*} / 2),  n_max = max(floor(|I| ||1/rho||^{r*}), 1).
/// Throws IntegrabilityError when the quadrature of ||1/rho||_{L^r} diverges.
NBounds n_bounds(const RhoProfile& rho, double r);

/// ||1/rho||_{L^r(I)} by endpoint-graded Gauss panels on the sample grid.
double inv_rho_lr_norm(const RhoProfile& rho, double r);

} // namespace mrc
