#include "mrc/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mrc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// g expressed in xi = 1 - mu to keep precision when the root sits close
// to mu = 1 (large |nu| and p near 1 push it below double resolution there):
//   g(xi) = 1 + (1-xi)^{1-p} |nu|^p - xi^{1-p},  strictly increasing in xi.
double g_of_xi(double xi, double p, double nu_abs_p) {
    return 1.0 + std::pow(1.0 - xi, 1.0 - p) * nu_abs_p - std::pow(xi, 1.0 - p);
}

} // namespace

ShiftSolve solve_shift(double p, double nu) {
    require(std::isfinite(p) && p > 1.0, "solve_shift: p must lie in (1, inf)");
    require(std::isfinite(nu), "solve_shift: nu must be finite");
    if (nu == 0.0) return {p, nu, 0.0, 1.0};

    const double nu_abs_p = std::pow(std::abs(nu), p);
    // Bracket in xi-space; the lower end sits far below any attainable root
    // so the residual stays at roundoff even for p -> 1, |nu| -> 50.
    double lo = 1e-300, hi = 1.0 - 1e-15;
    // g(lo) < 0 < g(hi) for nu != 0.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g_of_xi(mid, p, nu_abs_p) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * std::min(std::abs(lo), std::abs(hi))) break;
    }
    const double xi = 0.5 * (lo + hi);
    const double alpha = std::pow(1.0 + std::pow(1.0 - xi, 1.0 - p) * nu_abs_p, 1.0 / p);
    return {p, nu, 1.0 - xi, alpha};
}

double alpha_p(double p, double nu) { return solve_shift(p, nu).alpha; }

CpValue c_p_checked(double p, double nu) {
    const double alpha = alpha_p(p, nu); // validates p, nu
    double envelope_p; // 1 + e^{p nu_-} - e^{-p nu_+}, cancellation-free
    if (nu < 0.0) {
        envelope_p = std::exp(-p * nu); // the 1 and -e^0 cancel exactly
    } else if (nu > 0.0) {
        envelope_p = 2.0 - std::exp(-p * nu);
    } else {
        envelope_p = 1.0;
    }
    if (std::isinf(envelope_p)) return {kInf, true};
    return {alpha * std::pow(envelope_p, 1.0 / p), false};
}

double c_p(double p, double nu) { return c_p_checked(p, nu).value; }

double shift_bound_nonautonomous(double p, double lambda, double len, double K) {
    require(len > 0.0 && std::isfinite(len), "shift bound: interval length must be positive");
    require(K >= 0.0, "shift bound: K must be nonnegative");
    return c_p(p, lambda * len) * K;
}

AutonomousShiftBound shift_bound_autonomous(double lambda, double len, double M, double K) {
    require(len > 0.0 && std::isfinite(len), "autonomous shift: length must be positive");
    require(std::isfinite(lambda), "autonomous shift: lambda must be finite");
    require(M >= 1.0, "autonomous shift: M must be >= 1");
    require(K >= 0.0, "autonomous shift: K must be nonnegative");
    double res;
    if (lambda == 0.0) {
        res = M * len;
    } else {
        res = M * (-std::expm1(-lambda * len)) / lambda;
    }
    const double mr = (1.0 + M * std::abs(std::expm1(-lambda * len))) * K;
    return {res, mr};
}

double g_bound(double p, double tau, double eta, double M, double K) {
    require(tau > 0.0, "g_bound: tau must be positive");
    require(eta >= 0.0, "g_bound: eta must be nonnegative");
    require(M >= 1.0, "g_bound: M must be >= 1");
    require(K >= 0.0, "g_bound: K must be nonnegative");
    return 4.0 * (1.0 + M) * c_p(p, -4.0 * M * eta * tau) * K;
}

double q_p(double p, double T, double C, double G) {
    require(std::isfinite(p) && p > 1.0, "q_p: p must lie in (1, inf)");
    require(T > 0.0 && std::isfinite(T), "q_p: T must be positive");
    require(C >= 0.0 && G >= 0.0, "q_p: C and G must be nonnegative");
    const double q = p / (p - 1.0);
    const double two_q = std::pow(2.0, 1.0 / q);
    const double w = two_q * (p - 1.0) * G / T;           // w_p G / T
    const double inv_ct = (C > 0.0) ? 1.0 / (C * T) : kInf; // branch 3 unreachable at C = 0

    double best = kInf;
    if (w <= 1.0) {
        best = std::min(best, 1.0 + two_q * std::max(C * G, G / T));
    }
    if (w >= 1.0 && w <= inv_ct) {
        const double coef = std::pow(2.0, 1.0 / (p * q)) * p / std::pow(p - 1.0, 1.0 / q);
        best = std::min(best, coef * std::pow(G / T, 1.0 / p));
    }
    if (w >= inv_ct) {
        best = std::min(best, std::pow(std::max(inv_ct, 1.0), 1.0 / p) * (1.0 + two_q * C * G));
    }
    return best;
}

double h_factor(double p, const Subdivision& subdivision, int j, double C, double G) {
    const int N = subdivision.size();
    if (j < 2 || j > N) throw std::invalid_argument("h_factor: index j must satisfy 2 <= j <= N");
    const auto& tau = subdivision.taus;
    const double kappa1 = (tau[j] - tau[0]) / (tau[j - 1] - tau[0]);
    const double kappa2 = (tau[j] - tau[0]) / (tau[j] - tau[j - 1]);
    const double q = p / (p - 1.0);
    return kappa1 + std::pow(kappa1, 1.0 / p) * std::pow(kappa2, 1.0 / q) *
                        q_p(p, tau[j] - tau[j - 1], C, G);
}

double cov_factor(double psi_sup, double phi_sup, double lenI, double lenJ) {
    require(psi_sup > 0.0 && phi_sup > 0.0, "cov_factor: derivative sups must be positive");
    require(lenI > 0.0 && lenJ > 0.0, "cov_factor: lengths must be positive");
    return psi_sup * std::max(1.0, (lenI / lenJ) * phi_sup);
}

} // namespace mrc
