#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "mrc/errors.hpp"

namespace mrc {

/// Bounded open time interval (a, b), a < b, both finite.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_);
    double length() const { return b - a; }
    bool contains(double t) const { return t >= a && t <= b; }
};

/// Uniform grid on an interval: node(k) = a + k (b-a)/m, k = 0..m.
struct TimeGrid {
    Interval interval;
    int m;

    TimeGrid(Interval iv, int steps);
    double step() const { return interval.length() / m; }
    double node(int k) const { return interval.a + k * interval.length() / m; }
    std::vector<double> nodes() const;
};

/// Pair of diagonal weighted l^p norms on R^n modelling the continuous
/// embedding D -> X with constant 1.  ||x||_X = (sum (w_i |x_i|)^p)^(1/p)
/// and likewise for D; d_weights >= x_weights componentwise.
struct NormPair {
    int dim;
    std::vector<double> x_weights;
    std::vector<double> d_weights;
    double p;

    NormPair(int dim, std::vector<double> xw, std::vector<double> dw, double p);

    /// Uniform weights (X = D = scaled l^p).
    static NormPair uniform(int dim, double p, double weight = 1.0);
    /// X weight 1, D weight d_i per coordinate.
    static NormPair weighted(std::vector<double> d_weights, double p);

    double q() const { return p / (p - 1.0); }
    double x_norm(const Eigen::VectorXd& v) const;
    double d_norm(const Eigen::VectorXd& v) const;

    /// Operator norm of B as a map D -> X.  Exact (spectral) for p = 2;
    /// otherwise a Riesz-Thorin interpolation upper bound, exact for
    /// diagonal B.  Always >= the true norm.
    double op_norm_d_to_x(const Eigen::MatrixXd& B) const;

    /// Operator norm of B as a map X -> X, same convention as above.
    double op_norm_x_to_x(const Eigen::MatrixXd& B) const;
};

/// Time-dependent n x n matrix with a sampling grid and a certified upper
/// bound of its sup-in-time D->X operator norm over the grid nodes.
struct OperatorTrajectory {
    int dim;
    std::function<Eigen::MatrixXd(double)> eval;
    TimeGrid grid;
    double sup_norm;

    /// Builds the trajectory and computes sup_norm over the grid nodes.
    static OperatorTrajectory make(int dim, std::function<Eigen::MatrixXd(double)> eval,
                                   const TimeGrid& grid, const NormPair& norms);

    /// Autonomous trajectory t -> A0.
    static OperatorTrajectory constant(const Eigen::MatrixXd& A0, const TimeGrid& grid,
                                       const NormPair& norms);

    /// True if every grid-node matrix is diagonal (exactly).
    bool is_diagonal_on_grid() const;
};

/// Covering data {tau_i}_{0..N}, {t_i}_{1..N} with radii rho(t_i):
///   tau_0 = a <= t_1 < tau_1 < ... < t_N <= tau_N = b,
///   |t_i - tau_i| <= rho_i,  |t_i - tau_{i-1}| <= rho_i,
///   min(rho_i, b-a) <= tau_i - tau_{i-1} <= 2 rho_i.
struct Subdivision {
    std::vector<double> taus;
    std::vector<double> centers;
    std::vector<double> rho_at_centers;

    Subdivision(std::vector<double> taus, std::vector<double> centers,
                std::vector<double> rho_at_centers);

    int size() const { return static_cast<int>(centers.size()); }
    Interval interval() const { return Interval(taus.front(), taus.back()); }

    /// Throws std::invalid_argument naming the first violated inequality.
    static void check(const std::vector<double>& taus, const std::vector<double>& centers,
                      const std::vector<double>& rho_at_centers);
};

/// Range of relative continuity eps -> (delta(eps), eta(eps)), either the
/// Hoelder-type parametric family delta = m_delta eps^alpha,
/// eta = m_eta eps^(-beta), or a tabulated monotone envelope.
struct RCRange {
    enum class Kind { parametric, tabulated };

    struct Row {
        double eps;
        double delta;
        double eta;
    };

    Kind kind = Kind::parametric;
    double m_delta = 1.0;
    double alpha = 1.0;
    double m_eta = 0.0;
    double beta = 0.0;
    std::vector<Row> table;

    static RCRange holder(double m_delta, double alpha, double m_eta, double beta);
    static RCRange tabulated(std::vector<Row> rows);

    double delta(double eps) const;
    double eta(double eps) const;
};

/// Sampled profiles K0, M0 with the derived eps0 = 1/(2(K0+1)(M0+1)),
/// rho_A = delta(eps0) and mu_A = eta(eps0) for an attached range.
struct PointwiseMRData {
    std::vector<double> samples;
    std::vector<double> K0;
    std::vector<double> M0;
    std::vector<double> eps0;
    std::vector<double> rhoA;
    std::vector<double> muA;
    RCRange range;
};

/// A certified bound value together with the per-interval breakdown that
/// reproduces it, for audit.
struct BoundReport {
    struct PerInterval {
        double G;   // per-interval maximal regularity bound
        double H;   // recursion factor (1 for i = 1)
        double C;   // sup norm used in H
    };

    double value;
    Subdivision subdivision;
    std::vector<PerInterval> per_interval;
    std::string inputs_digest;

    BoundReport(double value, Subdivision subdivision, std::vector<PerInterval> per_interval,
                std::string inputs_digest);

    /// Recomputes value = sum_i (tau_i - tau_0)/(tau_i - tau_{i-1})
    ///                    * prod_{j>i} H_j * G_i from the breakdown.
    double recompute() const;
};

} // namespace mrc
