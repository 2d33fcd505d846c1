#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

namespace coorp {

/// How the logged input signal behaved between grid points. The world
/// stepper holds u constant over each step (ZeroOrder); hand-built logs
/// of smooth signals should say Sampled so quadrature treats them as such.
enum class InputHold { ZeroOrder, Sampled };

/// Signals of one run on a fixed grid. Row s of every matrix is the sample
/// at time[s].
struct TrajectoryLog {
    struct AgentTrack {
        Eigen::MatrixXd x;        // samples x n_i
        Eigen::MatrixXd u;        // samples x m_i
        Eigen::MatrixXd eta;      // samples x q
        Eigen::MatrixXd what;     // samples x q/2
        Eigen::MatrixXd err;      // samples x p_i   (tracking error e)
        Eigen::VectorXd eps_norm; // |local observation error|
    };

    double dt = 0.0;
    std::vector<double> time;
    Eigen::MatrixXd exo; // samples x q
    std::vector<AgentTrack> agents;
    InputHold input_hold = InputHold::Sampled;

    std::size_t samples() const { return time.size(); }

    /// Grid index of time t; throws if t is off the grid.
    std::size_t index_of(double t) const;

    /// CSV with one row per grid point:
    /// t, v1..vq, then per agent x_i_*, u_i_*, eta_i_*, what_i_*, epsnorm_i, e_i_*.
    void write_csv(std::ostream& out) const;
};

} // namespace coorp
