#include "mrc/covering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mrc/quadrature.hpp"

namespace mrc {

RhoProfile::RhoProfile(Interval iv, std::function<double(double)> f, int grid_m_)
    : interval(iv), eval(std::move(f)), grid_m(grid_m_) {
    if (grid_m < 2) throw std::invalid_argument("rho profile: grid must have >= 2 cells");
}

std::vector<double> RhoProfile::sampled() const {
    TimeGrid grid(interval, grid_m);
    std::vector<double> out(grid_m + 1);
    for (int k = 0; k <= grid_m; ++k) {
        out[k] = eval(grid.node(k));
        if (!(out[k] > 0.0) || !std::isfinite(out[k])) {
            std::ostringstream os;
            os << "rho profile: nonpositive sample at t = " << grid.node(k);
            throw std::invalid_argument(os.str());
        }
    }
    return out;
}

namespace {

struct Ball {
    double t;
    double rho;
    double left() const { return t - rho; }
    double reach() const { return t + rho; }
};

// Greedy maximal-reach ball chain covering [a, b].  The output provably
// satisfies the nonoverlap properties (left edges and reaches strictly
// increase, ball i+1 is disjoint from ball i-1); verify_chain rechecks them.
std::vector<Ball> greedy_chain(const RhoProfile& rho) {
    const double a = rho.interval.a, b = rho.interval.b;
    const double span = b - a;
    const double slack = 1e-12 * std::max(1.0, span);
    TimeGrid grid(rho.interval, rho.grid_m);
    const std::vector<double> rv = rho.sampled();

    std::vector<Ball> chain;
    double frontier = a;
    while (frontier < b - slack) {
        double best_reach = -std::numeric_limits<double>::infinity();
        int best = -1;
        for (int k = 0; k <= rho.grid_m; ++k) {
            const double t = grid.node(k);
            if (t - rv[k] > frontier + slack) continue;
            const double reach = t + rv[k];
            if (reach > best_reach) {
                best_reach = reach;
                best = k;
            }
        }
        if (best < 0 || best_reach <= frontier + slack) {
            std::ostringstream os;
            os << "covering stalled at t = " << frontier
               << " (no candidate ball advances the frontier; refine the grid or raise rho)";
            throw CoveringError(os.str(), frontier);
        }
        chain.push_back({grid.node(best), rv[best]});
        frontier = best_reach;
    }
    return chain;
}

void verify_chain(const std::vector<Ball>& chain) {
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!(chain[i + 1].t > chain[i].t) || !(chain[i + 1].left() > chain[i].left()) ||
            !(chain[i + 1].reach() > chain[i].reach()))
            throw NumericError("covering: greedy chain lost its nonoverlap ordering");
        if (i + 2 < chain.size() && !(chain[i + 2].left() >= chain[i].reach()))
            throw NumericError("covering: triple overlap in greedy chain");
    }
}

// Picks taus: midpoint-formula preference, clamped into the feasibility
// windows and the spacing corridors by a forward/backward interval pass.
std::vector<double> place_taus(const std::vector<Ball>& chain, double a, double b) {
    const int N = static_cast<int>(chain.size());
    const double span = b - a;
    std::vector<double> lo(N + 1), hi(N + 1), pref(N + 1);
    lo[0] = hi[0] = pref[0] = a;
    lo[N] = hi[N] = pref[N] = b;
    for (int i = 1; i < N; ++i) {
        lo[i] = std::max(chain[i - 1].t, chain[i].left());
        hi[i] = std::min(chain[i].t, chain[i - 1].reach());
        pref[i] = 0.5 * (chain[i].t + chain[i - 1].t) + 0.5 * (chain[i - 1].rho - chain[i].rho);
    }
    std::vector<double> L(N + 1), U(N + 1);
    for (int i = 1; i <= N; ++i) {
        L[i] = std::min(chain[i - 1].rho, span);
        U[i] = 2.0 * chain[i - 1].rho;
    }
    bool feasible = true;
    for (int i = 1; i <= N && feasible; ++i) {
        lo[i] = std::max(lo[i], lo[i - 1] + L[i]);
        hi[i] = std::min(hi[i], hi[i - 1] + U[i]);
        if (lo[i] > hi[i] + 1e-12 * span) feasible = false;
    }
    for (int i = N - 1; i >= 1 && feasible; --i) {
        hi[i] = std::min(hi[i], hi[i + 1] - L[i + 1]);
        lo[i] = std::max(lo[i], lo[i + 1] - U[i + 1]);
        if (lo[i] > hi[i] + 1e-12 * span) feasible = false;
    }
    std::vector<double> taus(N + 1);
    taus[0] = a;
    taus[N] = b;
    for (int i = 1; i < N; ++i) {
        double t = pref[i];
        if (feasible) {
            const double clo = std::max(lo[i], taus[i - 1] + L[i]);
            const double chi = std::min(hi[i], taus[i - 1] + U[i]);
            t = std::clamp(pref[i], clo, std::max(clo, chi));
        }
        taus[i] = t;
    }
    return taus;
}

} // namespace

Subdivision besicovitch_cover(const RhoProfile& rho) {
    std::vector<Ball> chain = greedy_chain(rho);
    verify_chain(chain);
    std::vector<double> taus = place_taus(chain, rho.interval.a, rho.interval.b);
    std::vector<double> centers(chain.size()), radii(chain.size());
    for (size_t i = 0; i < chain.size(); ++i) {
        centers[i] = chain[i].t;
        radii[i] = chain[i].rho;
    }
    return Subdivision(std::move(taus), std::move(centers), std::move(radii));
}

double inv_rho_lr_norm(const RhoProfile& rho, double r) {
    if (!(r > 1.0)) throw std::invalid_argument("inv_rho_lr_norm: requires r > 1");
    const auto& f = rho.eval;
    const double integral = integrate_open(
        [&f, r](double t) {
            const double v = f(t);
            if (!(v > 0.0)) throw IntegrabilityError("inv_rho_lr_norm: rho <= 0 inside interval");
            return std::pow(1.0 / v, r);
        },
        rho.interval.a, rho.interval.b, rho.grid_m);
    return std::pow(integral, 1.0 / r);
}

NBounds n_bounds(const RhoProfile& rho, double r) {
    const double norm = inv_rho_lr_norm(rho, r);
    const double r_star = r / (r - 1.0);
    const double value = rho.interval.length() * std::pow(norm, r_star);
    // integer thresholds with roundoff slack so exact cases land exactly
    const double slack = 1e-9 * std::max(1.0, value);
    long n_min = static_cast<long>(std::ceil(0.5 * value - slack));
    long n_max = std::max(static_cast<long>(std::floor(value + slack)), 1L);
    n_min = std::max(n_min, 1L);
    return {n_min, n_max, norm, std::pow(norm, -r_star)};
}

Subdivision uniform_cover(const RhoProfile& rho, double r) {
    const double a = rho.interval.a, b = rho.interval.b;
    const double span = b - a;
    const double eps0 = n_bounds(rho, r).eps0;
    TimeGrid grid(rho.interval, rho.grid_m);
    const std::vector<double> rv = rho.sampled();

    const auto pick_center = [&](double wlo, double whi, double mid, bool need_E) -> double {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= rho.grid_m; ++k) {
            const double t = grid.node(k);
            if (t < wlo || t > whi) continue;
            if (need_E && !(rv[k] > eps0)) continue;
            const double d = std::abs(t - mid);
            if (d < best_dist) {
                best_dist = d;
                best = k;
            }
        }
        if (best < 0)
            throw ResolutionError(
                "uniform cover: {rho > eps0} is not eps0-dense at this sampling resolution; "
                "use a finer grid");
        return grid.node(best);
    };

    if (2.0 * eps0 >= span) {
        // Single ball covers the interval; E-membership is waived when eps0
        // exceeds sup rho (the degenerate large-radius case).
        const double wlo = std::max(a, b - eps0), whi = std::min(b, a + eps0);
        const bool need_E = *std::max_element(rv.begin(), rv.end()) > eps0;
        const double t1 = pick_center(wlo, whi, 0.5 * (a + b), need_E);
        return Subdivision({a, b}, {t1}, {eps0});
    }

    const long N = static_cast<long>(std::ceil(span / (2.0 * eps0) - 1e-12));
    const double s = span / static_cast<double>(N); // s in [eps0, 2 eps0]
    std::vector<double> taus(N + 1);
    for (long i = 0; i <= N; ++i) taus[i] = a + s * static_cast<double>(i);
    taus[N] = b;

    std::vector<double> centers(N), radii(N, eps0);
    const double shrink = 1e-9 * span; // keep centers strictly between interior taus
    for (long i = 1; i <= N; ++i) {
        double wlo = std::max(taus[i] - eps0, (i > 1) ? taus[i - 1] + shrink : a);
        double whi = std::min(taus[i - 1] + eps0, (i < N) ? taus[i] - shrink : b);
        centers[i - 1] = pick_center(wlo, whi, 0.5 * (taus[i - 1] + taus[i]), true);
    }
    return Subdivision(std::move(taus), std::move(centers), std::move(radii));
}

} // namespace mrc
