#include "coorp/collect.hpp"

#include "coorp/kronpack.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace coorp {

std::vector<double> sampling_grid(double t0, int count, double step)
{
    std::vector<double> out(count + 1);
    for (int l = 0; l <= count; ++l) {
        out[l] = t0 + l * step;
    }
    return out;
}

DataMatrices accumulate(const TrajectoryLog& log,
                        int agent,
                        const Eigen::MatrixXd& X_j,
                        const std::vector<double>& instants,
                        ExoSignal signal)
{
    if (agent < 0 || agent >= static_cast<int>(log.agents.size())) {
        throw std::invalid_argument("accumulate: agent index out of range");
    }
    if (instants.size() < 2) {
        throw std::invalid_argument("accumulate: need at least one sampling interval");
    }
    const auto& track = log.agents[agent];
    const int n = static_cast<int>(track.x.cols());
    const int m = static_cast<int>(track.u.cols());
    const int q = static_cast<int>(log.exo.cols());
    if (X_j.rows() != n || X_j.cols() != q) {
        throw std::invalid_argument("accumulate: trial matrix has wrong shape");
    }

    std::vector<std::size_t> idx(instants.size());
    for (std::size_t l = 0; l < instants.size(); ++l) {
        idx[l] = log.index_of(instants[l]);
        if (l > 0 && idx[l] <= idx[l - 1]) {
            throw std::invalid_argument("accumulate: sampling instants must be strictly increasing");
        }
    }

    const Eigen::MatrixXd& w = signal == ExoSignal::Estimate ? track.eta : log.exo;
    // xbar rows: x(t) - X_j w(t)
    const Eigen::MatrixXd xbar = track.x - w * X_j.transpose();

    const int s = static_cast<int>(instants.size()) - 1;
    DataMatrices data;
    data.dxx.resize(s, vecs_size(n));
    data.gxx.resize(s, n * n);
    data.gxu.resize(s, n * m);
    data.gxv.resize(s, n * q);

    const double dt = log.dt;
    const bool zoh = log.input_hold == InputHold::ZeroOrder;
    for (int l = 0; l < s; ++l) {
        const std::size_t a = idx[l];
        const std::size_t b = idx[l + 1];
        data.dxx.row(l) = vecv(xbar.row(b).transpose()) - vecv(xbar.row(a).transpose());

        Eigen::VectorXd ixx = Eigen::VectorXd::Zero(n * n);
        Eigen::VectorXd ixu = Eigen::VectorXd::Zero(n * m);
        Eigen::VectorXd ixv = Eigen::VectorXd::Zero(n * q);
        for (std::size_t t = a; t < b; ++t) {
            const Eigen::VectorXd x0 = xbar.row(t).transpose();
            const Eigen::VectorXd x1 = xbar.row(t + 1).transpose();
            const Eigen::VectorXd w0 = w.row(t).transpose();
            const Eigen::VectorXd w1 = w.row(t + 1).transpose();
            ixx += 0.5 * dt * (kron(x0, x0) + kron(x1, x1));
            ixv += 0.5 * dt * (kron(x0, w0) + kron(x1, w1));
            const Eigen::VectorXd u0 = track.u.row(t).transpose();
            if (zoh) {
                // u is constant over [t, t+1); integrate xbar alone.
                ixu += kron(Eigen::VectorXd(0.5 * dt * (x0 + x1)), u0);
            } else {
                const Eigen::VectorXd u1 = track.u.row(t + 1).transpose();
                ixu += 0.5 * dt * (kron(x0, u0) + kron(x1, u1));
            }
        }
        data.gxx.row(l) = ixx;
        data.gxu.row(l) = ixu;
        data.gxv.row(l) = ixv;
    }
    return data;
}

RankCheck rank_condition(const DataMatrices& data, int n, int m, int q)
{
    RankCheck check;
    check.required = n * (n + 1) / 2 + (m + q) * n;
    Eigen::MatrixXd stacked(data.gxx.rows(), data.gxx.cols() + data.gxu.cols() + data.gxv.cols());
    stacked << data.gxx, data.gxu, data.gxv;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked);
    const auto& sv = svd.singularValues();
    check.achieved = 0;
    if (sv.size() > 0 && sv(0) > 0.0) {
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
            if (sv(i) > 1e-8 * sv(0)) ++check.achieved;
        }
    }
    check.ok = check.achieved == check.required;
    return check;
}

} // namespace coorp
