#pragma once

#include "mrc/core.hpp"

namespace mrc {

/// Solution of the inner optimization behind the diagonal-shift bound:
/// mu_star minimizes R_p(mu, nu) = (1 + mu^{1-p} |nu|^p) v (1-mu)^{1-p}
/// over mu in (0,1), and alpha = R_p(mu_star, nu)^{1/p}.
struct ShiftSolve {
    double p;
    double nu;
    double mu_star;
    double alpha;
};

/// Finds mu_star as the unique root of
///   g(mu) = 1 + mu^{1-p} |nu|^p - (1-mu)^{1-p}
/// by bisection (relative tolerance 1e-12 on the root).  alpha_p(0) = 1.
ShiftSolve solve_shift(double p, double nu);

/// alpha_p(nu) = min_{mu in (0,1)} R_p(mu, nu)^{1/p} >= 1.
double alpha_p(double p, double nu);

struct CpValue {
    double value;
    bool saturated; // exponential overflowed; value is +inf, never NaN
};

/// Shift constant c_p(nu) = alpha_p(nu) (1 + e^{p nu_-} - e^{-p nu_+})^{1/p}
/// with nu_+ = max(nu,0), nu_- = max(-nu,0); c_p(0) = 1.
CpValue c_p_checked(double p, double nu);
double c_p(double p, double nu);

/// Nonautonomous diagonal-shift bound: [A + lambda] <= c_p(lambda len) K.
double shift_bound_nonautonomous(double p, double lambda, double len, double K);

struct AutonomousShiftBound {
    double res_norm; // resolvent bound M (1 - e^{-lambda len}) / lambda
    double mr_bound; // (1 + M |1 - e^{-lambda len}|) K
};

/// Autonomous resolvent/shift bounds; res_norm extends continuously to
/// M len at lambda = 0.
AutonomousShiftBound shift_bound_autonomous(double lambda, double len, double M, double K);

/// Regular-perturbation bound G(tau, eta, M, K) = 4 (1 + M) c_p(-4 M eta tau) K.
double g_bound(double p, double tau, double eta, double M, double K);

/// Trace-lifting factor Q_p(T, C, G): three-branch closed form with
/// w_p = 2^{1/q} (p-1); equals min_{mu >= 1} mu^{1/p} (1 + 2^{1/q} max(C, 1/(mu T)) G).
/// Overlapping branch conditions are resolved by taking the minimum.
double q_p(double p, double T, double C, double G);

/// Recursion factor H_j = kappa_{1,j} + kappa_{1,j}^{1/p} kappa_{2,j}^{1/q}
/// Q_p(tau_j - tau_{j-1}, C, G), with kappa_{1,j} = (tau_j - tau_0)/(tau_{j-1} - tau_0)
/// and kappa_{2,j} = (tau_j - tau_0)/(tau_j - tau_{j-1}).  2 <= j <= N.
double h_factor(double p, const Subdivision& subdivision, int j, double C, double G);

/// Change-of-variable factor psi_sup * max(1, (lenI/lenJ) phi_sup).
double cov_factor(double psi_sup, double phi_sup, double lenI, double lenJ);

} // namespace mrc
