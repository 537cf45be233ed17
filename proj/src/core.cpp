#include "mrc/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mrc {

namespace {

bool finite(double x) { return std::isfinite(x); }

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!finite(a) || !finite(b)) bad("interval endpoints must be finite");
    if (!(a < b)) bad("interval requires a < b");
}

TimeGrid::TimeGrid(Interval iv, int steps) : interval(iv), m(steps) {
    if (m < 1) bad("time grid needs at least one step");
}

std::vector<double> TimeGrid::nodes() const {
    std::vector<double> out(m + 1);
    for (int k = 0; k <= m; ++k) out[k] = node(k);
    out[0] = interval.a;
    out[m] = interval.b;
    return out;
}

NormPair::NormPair(int dim_, std::vector<double> xw, std::vector<double> dw, double p_)
    : dim(dim_), x_weights(std::move(xw)), d_weights(std::move(dw)), p(p_) {
    if (dim < 1) bad("norm pair needs dim >= 1");
    if (!(p > 1.0) || !finite(p)) bad("exponent p must lie in (1, inf)");
    if (static_cast<int>(x_weights.size()) != dim || static_cast<int>(d_weights.size()) != dim)
        bad("weight vectors must have length dim");
    for (int i = 0; i < dim; ++i) {
        if (!(x_weights[i] > 0.0) || !(d_weights[i] > 0.0)) bad("norm weights must be positive");
        if (d_weights[i] < x_weights[i]) bad("d_weights must dominate x_weights componentwise");
    }
}

NormPair NormPair::uniform(int dim, double p, double weight) {
    return NormPair(dim, std::vector<double>(dim, weight), std::vector<double>(dim, weight), p);
}

NormPair NormPair::weighted(std::vector<double> d_weights, double p) {
    int n = static_cast<int>(d_weights.size());
    return NormPair(n, std::vector<double>(n, 1.0), std::move(d_weights), p);
}

namespace {

double weighted_lp(const Eigen::VectorXd& v, const std::vector<double>& w, double p) {
    double s = 0.0;
    for (int i = 0; i < v.size(); ++i) s += std::pow(std::abs(w[i] * v[i]), p);
    return std::pow(s, 1.0 / p);
}

} // namespace

double NormPair::x_norm(const Eigen::VectorXd& v) const {
    if (p == 2.0) {
        double s = 0.0;
        for (int i = 0; i < v.size(); ++i) s += x_weights[i] * x_weights[i] * v[i] * v[i];
        return std::sqrt(s);
    }
    return weighted_lp(v, x_weights, p);
}

double NormPair::d_norm(const Eigen::VectorXd& v) const {
    if (p == 2.0) {
        double s = 0.0;
        for (int i = 0; i < v.size(); ++i) s += d_weights[i] * d_weights[i] * v[i] * v[i];
        return std::sqrt(s);
    }
    return weighted_lp(v, d_weights, p);
}

namespace {

// ||W_out B W_in^{-1}|| for weighted l^p norms: spectral norm at p = 2,
// and the l^1/l^inf interpolation bound ||.||_1^{1/p} ||.||_inf^{1/q}
// otherwise (exact for diagonal B).
double weighted_op_norm(const Eigen::MatrixXd& B, const std::vector<double>& w_in,
                        const std::vector<double>& w_out, double p) {
    const int n = static_cast<int>(B.rows());
    Eigen::MatrixXd S = B;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S(i, j) = w_out[i] * B(i, j) / w_in[j];
    if (p == 2.0) {
        if (n == 1) return std::abs(S(0, 0));
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(S);
        return svd.singularValues()(0);
    }
    double n1 = 0.0, ninf = 0.0;
    for (int j = 0; j < n; ++j) n1 = std::max(n1, S.col(j).cwiseAbs().sum());
    for (int i = 0; i < n; ++i) ninf = std::max(ninf, S.row(i).cwiseAbs().sum());
    return std::pow(n1, 1.0 / p) * std::pow(ninf, 1.0 - 1.0 / p);
}

} // namespace

double NormPair::op_norm_d_to_x(const Eigen::MatrixXd& B) const {
    return weighted_op_norm(B, d_weights, x_weights, p);
}

double NormPair::op_norm_x_to_x(const Eigen::MatrixXd& B) const {
    return weighted_op_norm(B, x_weights, x_weights, p);
}

OperatorTrajectory OperatorTrajectory::make(int dim, std::function<Eigen::MatrixXd(double)> eval,
                                            const TimeGrid& grid, const NormPair& norms) {
    if (norms.dim != dim) bad("norm pair dimension mismatch");
    OperatorTrajectory traj{dim, std::move(eval), grid, 0.0};
    double sup = 0.0;
    for (int k = 0; k <= grid.m; ++k) {
        Eigen::MatrixXd A = traj.eval(grid.node(k));
        if (A.rows() != dim || A.cols() != dim) bad("trajectory matrix has wrong dimension");
        sup = std::max(sup, norms.op_norm_d_to_x(A));
    }
    traj.sup_norm = sup;
    return traj;
}

OperatorTrajectory OperatorTrajectory::constant(const Eigen::MatrixXd& A0, const TimeGrid& grid,
                                                const NormPair& norms) {
    Eigen::MatrixXd A = A0;
    return make(static_cast<int>(A0.rows()), [A](double) { return A; }, grid, norms);
}

bool OperatorTrajectory::is_diagonal_on_grid() const {
    for (int k = 0; k <= grid.m; ++k) {
        Eigen::MatrixXd A = eval(grid.node(k));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j && A(i, j) != 0.0) return false;
    }
    return true;
}

Subdivision::Subdivision(std::vector<double> taus_, std::vector<double> centers_,
                         std::vector<double> rho_)
    : taus(std::move(taus_)), centers(std::move(centers_)), rho_at_centers(std::move(rho_)) {
    check(taus, centers, rho_at_centers);
}

void Subdivision::check(const std::vector<double>& taus, const std::vector<double>& centers,
                        const std::vector<double>& rho) {
    const size_t N = centers.size();
    if (N == 0) bad("subdivision: no intervals");
    if (taus.size() != N + 1 || rho.size() != N) bad("subdivision: inconsistent lengths");
    const double a = taus.front(), b = taus.back();
    if (!(a < b)) bad("subdivision: tau_0 < tau_N required");
    const double span = b - a;
    // FP noise allowance on the non-strict inequalities.
    const double eps = 1e-12 * std::max(1.0, span);

    // chain: a = tau_0 <= t_1 < tau_1 < t_2 < ... < t_N <= tau_N = b
    if (centers.front() < a - eps) bad("subdivision: t_1 < tau_0");
    if (centers.back() > b + eps) bad("subdivision: t_N > tau_N");
    for (size_t i = 0; i + 1 < N; ++i) {
        if (!(centers[i] < taus[i + 1])) bad("subdivision: requires t_i < tau_i");
        if (!(taus[i + 1] < centers[i + 1])) bad("subdivision: requires tau_i < t_{i+1}");
    }
    for (size_t i = 0; i < N; ++i) {
        if (!(rho[i] > 0.0)) bad("subdivision: rho(t_i) must be positive");
        if (std::abs(centers[i] - taus[i + 1]) > rho[i] + eps)
            bad("subdivision: |t_i - tau_i| <= rho(t_i) violated");
        if (std::abs(centers[i] - taus[i]) > rho[i] + eps)
            bad("subdivision: |t_i - tau_{i-1}| <= rho(t_i) violated");
        const double gap = taus[i + 1] - taus[i];
        if (gap < std::min(rho[i], span) - eps)
            bad("subdivision: min(rho, |I|) <= tau_i - tau_{i-1} violated");
        if (gap > 2.0 * rho[i] + eps)
            bad("subdivision: tau_i - tau_{i-1} <= 2 rho(t_i) violated");
    }
}

RCRange RCRange::holder(double m_delta, double alpha, double m_eta, double beta) {
    if (!(m_delta > 0.0) || m_delta > 1.0) bad("rc range: m_delta must lie in (0,1]");
    if (!(alpha >= 1.0)) bad("rc range: alpha must be >= 1");
    if (!(m_eta >= 0.0)) bad("rc range: m_eta must be >= 0");
    if (!(beta >= 0.0)) bad("rc range: beta must be >= 0");
    RCRange r;
    r.kind = Kind::parametric;
    r.m_delta = m_delta;
    r.alpha = alpha;
    r.m_eta = m_eta;
    r.beta = beta;
    return r;
}

RCRange RCRange::tabulated(std::vector<Row> rows) {
    if (rows.empty()) bad("rc range: empty table");
    for (size_t k = 0; k < rows.size(); ++k) {
        if (!(rows[k].eps > 0.0) || !(rows[k].delta > 0.0) || rows[k].eta < 0.0)
            bad("rc range: table entries must satisfy eps > 0, delta > 0, eta >= 0");
        if (k > 0) {
            if (!(rows[k].eps > rows[k - 1].eps)) bad("rc range: eps must be strictly increasing");
            if (rows[k].delta < rows[k - 1].delta) bad("rc range: delta must be nondecreasing");
            if (rows[k].eta > rows[k - 1].eta) bad("rc range: eta must be nonincreasing");
        }
    }
    RCRange r;
    r.kind = Kind::tabulated;
    r.table = std::move(rows);
    return r;
}

namespace {

// Largest row with eps_k <= eps; using it for a bigger eps stays admissible.
const RCRange::Row& floor_row(const std::vector<RCRange::Row>& table, double eps) {
    if (eps < table.front().eps)
        throw std::invalid_argument("rc range: eps below tabulated range");
    size_t lo = 0;
    for (size_t k = 1; k < table.size() && table[k].eps <= eps; ++k) lo = k;
    return table[lo];
}

} // namespace

double RCRange::delta(double eps) const {
    if (!(eps > 0.0)) bad("rc range: eps must be positive");
    if (kind == Kind::parametric) return m_delta * std::pow(eps, alpha);
    return floor_row(table, eps).delta;
}

double RCRange::eta(double eps) const {
    if (!(eps > 0.0)) bad("rc range: eps must be positive");
    if (kind == Kind::parametric) {
        if (beta == 0.0) return m_eta;
        return m_eta * std::pow(eps, -beta);
    }
    return floor_row(table, eps).eta;
}

BoundReport::BoundReport(double value_, Subdivision subdivision_,
                         std::vector<PerInterval> per_interval_, std::string digest)
    : value(value_),
      subdivision(std::move(subdivision_)),
      per_interval(std::move(per_interval_)),
      inputs_digest(std::move(digest)) {
    if (static_cast<int>(per_interval.size()) != subdivision.size())
        bad("bound report: breakdown size mismatch");
    const double re = recompute();
    if (std::isfinite(value) || std::isfinite(re)) {
        const double err = std::abs(value - re);
        if (!(err <= 1e-12 * std::max(std::abs(value), std::abs(re))))
            bad("bound report: value does not match its breakdown");
    }
}

double BoundReport::recompute() const {
    const int N = subdivision.size();
    const auto& tau = subdivision.taus;
    double total = 0.0;
    for (int i = 1; i <= N; ++i) {
        double prod = 1.0;
        for (int j = i + 1; j <= N; ++j) prod *= per_interval[j - 1].H;
        const double kappa2 = (tau[i] - tau[0]) / (tau[i] - tau[i - 1]);
        total += kappa2 * prod * per_interval[i - 1].G;
    }
    return total;
}

} // namespace mrc
