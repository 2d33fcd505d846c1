#pragma once

#include "coorp/graph.hpp"
#include "coorp/model.hpp"
#include "coorp/observer.hpp"
#include "coorp/trajectory.hpp"

#include <Eigen/Core>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coorp {

/// Single fixed-size classical Runge-Kutta step of y' = f(y).
template <class Rhs>
Eigen::VectorXd rk4_step(const Rhs& f, const Eigen::VectorXd& y, double dt)
{
    const Eigen::VectorXd k1 = f(y);
    const Eigen::VectorXd k2 = f(y + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = f(y + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = f(y + dt * k3);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// One step of v' = E v.
Eigen::VectorXd step_exosystem(const Eigen::VectorXd& v, const Eigen::MatrixXd& E, double dt);

/// One step of x' = A x + B u + D v with u, v held constant.
Eigen::VectorXd step_follower(const Eigen::VectorXd& x,
                              const Eigen::VectorXd& u,
                              const Eigen::VectorXd& v,
                              const AgentModel& model,
                              double dt);

/// e = C x + F v.
Eigen::VectorXd tracking_error(const Eigen::VectorXd& x,
                               const Eigen::VectorXd& v,
                               const AgentModel& model);

/// A simulation state left the divergence guard. Carries the offending
/// time and agent (-1 for the exosystem).
struct DivergenceError : std::runtime_error {
    DivergenceError(double time, int agent, const std::string& what_arg)
        : std::runtime_error(what_arg), time(time), agent(agent)
    {
    }
    double time;
    int agent;
};

/// Everything the coupled stepper needs to run one network.
struct World {
    ExosystemModel exo;
    std::vector<AgentModel> agents;
    CommGraph graph;
    ObserverGains gains;
};

/// Per-agent control law u_i = f(i, t, x_i, eta_i), evaluated once per
/// step and held constant across the step.
using ControlLaw =
    std::function<Eigen::VectorXd(int, double, const Eigen::VectorXd&, const Eigen::VectorXd&)>;

struct SimOptions {
    double duration = 1.0;
    double dt = 1e-3;
    double start_time = 0.0;
    Eigen::VectorXd v0;                  // required
    std::vector<Eigen::VectorXd> x0;     // empty -> zeros
    std::vector<Eigen::VectorXd> eta0;   // empty -> zeros
    std::vector<Eigen::VectorXd> what0;  // empty -> zeros
    double divergence_limit = 1e8;
};

/// Co-integrates exosystem, followers, and observers on one grid. Observer
/// errors are recomputed at every RK4 stage from the staged neighbor
/// states; control inputs are held constant within a step.
TrajectoryLog simulate(const World& world, const ControlLaw& control, const SimOptions& opts);

} // namespace coorp
