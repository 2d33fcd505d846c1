#pragma once

#include "coorp/trajectory.hpp"

#include <Eigen/Core>
#include <vector>

namespace coorp {

/// Which signal stands in for the exostate when building shifted
/// trajectories and their integrals: the agent's own estimate (the
/// model-free route) or the true exostate (ablation/reference).
enum class ExoSignal { Estimate, True };

/// Quadrature matrices of one shifted trajectory xbar = x - X_j w over the
/// sampling intervals: per row l,
///   dxx row = vecv(xbar(t_l)) - vecv(xbar(t_{l-1}))
///   g**  row = integral over [t_{l-1}, t_l] of the Kronecker product.
struct DataMatrices {
    Eigen::MatrixXd dxx; // s x n(n+1)/2
    Eigen::MatrixXd gxx; // s x n^2
    Eigen::MatrixXd gxu; // s x n m
    Eigen::MatrixXd gxv; // s x n q
};

/// Uniform sampling instants t0, t0+step, ..., t0+count*step.
std::vector<double> sampling_grid(double t0, int count, double step);

/// Integrates the data matrices from a log. Trapezoid rule on the
/// integration grid; when the log's inputs were zero-order held, the
/// u-weighted block uses the held value exactly instead of averaging
/// across the jump. Sampling instants must lie on the grid, strictly
/// increasing.
DataMatrices accumulate(const TrajectoryLog& log,
                        int agent,
                        const Eigen::MatrixXd& X_j,
                        const std::vector<double>& instants,
                        ExoSignal signal = ExoSignal::Estimate);

struct RankCheck {
    bool ok = false;
    int achieved = 0;
    int required = 0;
};

/// Persistent-excitation test: numerical rank of [gxx, gxu, gxv] must
/// reach n(n+1)/2 + (m+q) n. Singular values below 1e-8 of the largest
/// are treated as zero.
RankCheck rank_condition(const DataMatrices& data, int n, int m, int q);

} // namespace coorp
