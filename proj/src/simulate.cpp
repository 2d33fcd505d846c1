#include "coorp/simulate.hpp"

#include <cmath>
#include <optional>

namespace coorp {

Eigen::VectorXd step_exosystem(const Eigen::VectorXd& v, const Eigen::MatrixXd& E, double dt)
{
    if (dt <= 0.0) {
        throw std::invalid_argument("step_exosystem: dt must be positive");
    }
    return rk4_step([&](const Eigen::VectorXd& y) -> Eigen::VectorXd { return E * y; }, v, dt);
}

Eigen::VectorXd step_follower(const Eigen::VectorXd& x,
                              const Eigen::VectorXd& u,
                              const Eigen::VectorXd& v,
                              const AgentModel& model,
                              double dt)
{
    if (x.size() != model.state_dim() || u.size() != model.input_dim() ||
        v.size() != model.exo_dim()) {
        throw std::invalid_argument("step_follower: dimension mismatch");
    }
    const Eigen::VectorXd drive = model.B * u + model.D * v;
    return rk4_step(
        [&](const Eigen::VectorXd& y) -> Eigen::VectorXd { return model.A * y + drive; }, x, dt);
}

Eigen::VectorXd tracking_error(const Eigen::VectorXd& x,
                               const Eigen::VectorXd& v,
                               const AgentModel& model)
{
    if (x.size() != model.state_dim() || v.size() != model.exo_dim()) {
        throw std::invalid_argument("tracking_error: dimension mismatch");
    }
    return model.C * x + model.F * v;
}

namespace {

/// Offsets of each signal inside the packed world state.
struct Layout {
    int q = 0;
    std::vector<int> x_at, eta_at, what_at;
    std::vector<int> n;
    int total = 0;

    explicit Layout(const World& w)
    {
        q = w.exo.dim();
        int off = q;
        for (const AgentModel& a : w.agents) {
            n.push_back(a.state_dim());
            x_at.push_back(off);
            off += a.state_dim();
            eta_at.push_back(off);
            off += q;
            what_at.push_back(off);
            off += q / 2;
        }
        total = off;
    }
};

} // namespace

TrajectoryLog simulate(const World& world, const ControlLaw& control, const SimOptions& opts)
{
    const int num_agents = static_cast<int>(world.agents.size());
    const int q = world.exo.dim();
    if (opts.v0.size() != q) {
        throw std::invalid_argument("simulate: v0 has wrong dimension");
    }
    if (opts.dt <= 0.0 || opts.duration <= 0.0) {
        throw std::invalid_argument("simulate: dt and duration must be positive");
    }
    const auto steps = static_cast<std::size_t>(std::llround(opts.duration / opts.dt));
    if (std::abs(steps * opts.dt - opts.duration) > 1e-9) {
        throw std::invalid_argument("simulate: dt must divide the duration");
    }
    world.gains.validate(q);
    if (world.graph.size() != num_agents) {
        throw std::invalid_argument("simulate: graph size does not match agent count");
    }
    for (const AgentModel& a : world.agents) {
        a.validate_dimensions();
        if (a.exo_dim() != q) {
            throw std::invalid_argument("simulate: agent exosystem dimension mismatch");
        }
    }

    const Layout lay(world);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(lay.total);
    z.head(q) = opts.v0;
    for (int i = 0; i < num_agents; ++i) {
        if (!opts.x0.empty()) z.segment(lay.x_at[i], lay.n[i]) = opts.x0[i];
        if (!opts.eta0.empty()) z.segment(lay.eta_at[i], q) = opts.eta0[i];
        if (!opts.what0.empty()) z.segment(lay.what_at[i], q / 2) = opts.what0[i];
    }

    const Eigen::MatrixXd e_true = world.exo.matrix();

    // Staged observation error for agent i given the full staged state.
    const auto staged_eps = [&](const Eigen::VectorXd& y, int i) -> Eigen::VectorXd {
        Eigen::VectorXd eps = Eigen::VectorXd::Zero(q);
        const Eigen::VectorXd eta_i = y.segment(lay.eta_at[i], q);
        for (const auto& [j, weight] : world.graph.neighbors(i)) {
            eps += weight * (eta_i - y.segment(lay.eta_at[j], q));
        }
        if (world.graph.is_target(i)) {
            eps += eta_i - y.head(q);
        }
        return eps;
    };

    std::vector<Eigen::VectorXd> held_u(num_agents);
    const auto rhs = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
        Eigen::VectorXd dy(lay.total);
        dy.head(q) = e_true * y.head(q);
        for (int i = 0; i < num_agents; ++i) {
            const AgentModel& a = world.agents[i];
            const Eigen::VectorXd eps = staged_eps(y, i);
            ObserverState obs{y.segment(lay.eta_at[i], q), y.segment(lay.what_at[i], q / 2)};
            const ObserverDerivative od = observer_rhs(obs, eps, world.gains);
            dy.segment(lay.x_at[i], lay.n[i]) =
                a.A * y.segment(lay.x_at[i], lay.n[i]) + a.B * held_u[i] + a.D * y.head(q);
            dy.segment(lay.eta_at[i], q) = od.eta_dot;
            dy.segment(lay.what_at[i], q / 2) = od.what_dot;
        }
        return dy;
    };

    TrajectoryLog log;
    log.dt = opts.dt;
    log.input_hold = InputHold::ZeroOrder;
    log.time.resize(steps + 1);
    log.exo.resize(steps + 1, q);
    log.agents.resize(num_agents);
    for (int i = 0; i < num_agents; ++i) {
        auto& tr = log.agents[i];
        tr.x.resize(steps + 1, lay.n[i]);
        tr.u.resize(steps + 1, world.agents[i].input_dim());
        tr.eta.resize(steps + 1, q);
        tr.what.resize(steps + 1, q / 2);
        tr.err.resize(steps + 1, world.agents[i].output_dim());
        tr.eps_norm.resize(steps + 1);
    }

    const auto record = [&](std::size_t s, double t) {
        log.time[s] = t;
        log.exo.row(s) = z.head(q).transpose();
        for (int i = 0; i < num_agents; ++i) {
            auto& tr = log.agents[i];
            const Eigen::VectorXd x = z.segment(lay.x_at[i], lay.n[i]);
            tr.x.row(s) = x.transpose();
            tr.u.row(s) = held_u[i].transpose();
            tr.eta.row(s) = z.segment(lay.eta_at[i], q).transpose();
            tr.what.row(s) = z.segment(lay.what_at[i], q / 2).transpose();
            tr.err.row(s) = tracking_error(x, z.head(q), world.agents[i]).transpose();
            tr.eps_norm(s) = staged_eps(z, i).norm();
        }
    };

    const auto guard = [&](double t) {
        if (!z.allFinite() || z.head(q).norm() > opts.divergence_limit) {
            throw DivergenceError(t, -1, "simulate: exosystem state diverged at t=" +
                                             std::to_string(t));
        }
        for (int i = 0; i < num_agents; ++i) {
            if (z.segment(lay.x_at[i], lay.n[i]).norm() > opts.divergence_limit) {
                throw DivergenceError(t, i,
                                      "simulate: agent " + std::to_string(i + 1) +
                                          " diverged at t=" + std::to_string(t));
            }
        }
    };

    for (std::size_t s = 0; s <= steps; ++s) {
        const double t = opts.start_time + static_cast<double>(s) * opts.dt;
        for (int i = 0; i < num_agents; ++i) {
            held_u[i] = control(i, t, z.segment(lay.x_at[i], lay.n[i]),
                                z.segment(lay.eta_at[i], q));
        }
        record(s, t);
        if (s == steps) {
            break;
        }
        z = rk4_step(rhs, z, opts.dt);
        guard(t + opts.dt);
    }
    return log;
}

} // namespace coorp
