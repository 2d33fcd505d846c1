#include "coorp/observer.hpp"

#include "coorp/model.hpp"

#include <stdexcept>

namespace coorp {

void ObserverGains::validate(int q) const
{
    if (q % 2 != 0) {
        throw std::invalid_argument("observer gains: exosystem dimension must be even");
    }
    if (2 * a.size() != q || 2 * kappa.size() != q) {
        throw std::invalid_argument("observer gains: need q/2 entries in a and kappa");
    }
    if ((a.array() <= 0.0).any() || (kappa.array() <= 0.0).any()) {
        throw std::invalid_argument("observer gains: all entries must be positive");
    }
}

Eigen::MatrixXd ObserverGains::stable_part() const
{
    const int q = 2 * static_cast<int>(a.size());
    Eigen::MatrixXd am = Eigen::MatrixXd::Zero(q, q);
    for (int r = 0; r < a.size(); ++r) {
        am(2 * r, 2 * r) = -a(r);
        am(2 * r + 1, 2 * r + 1) = -a(r);
    }
    return am;
}

Eigen::VectorXd local_error(const Eigen::VectorXd& eta_i,
                            const std::vector<std::pair<double, Eigen::VectorXd>>& neighbor_etas,
                            bool has_leader_access,
                            const std::optional<Eigen::VectorXd>& leader_state)
{
    if (has_leader_access && !leader_state.has_value()) {
        throw std::invalid_argument("local_error: target agent requires the leader state");
    }
    Eigen::VectorXd eps = Eigen::VectorXd::Zero(eta_i.size());
    for (const auto& [weight, eta_j] : neighbor_etas) {
        eps += weight * (eta_i - eta_j);
    }
    if (has_leader_access) {
        eps += eta_i - *leader_state;
    }
    return eps;
}

ObserverDerivative observer_rhs(const ObserverState& state,
                                const Eigen::VectorXd& eps,
                                const ObserverGains& gains)
{
    const Eigen::MatrixXd ehat = harmonic_matrix(state.what);
    ObserverDerivative d;
    d.eta_dot = ehat * state.eta + (gains.stable_part() - ehat) * eps;
    d.what_dot.resize(state.what.size());
    for (int r = 0; r < state.what.size(); ++r) {
        d.what_dot(r) = gains.kappa(r) * (state.eta(2 * r) * eps(2 * r + 1) -
                                          state.eta(2 * r + 1) * eps(2 * r));
    }
    return d;
}

} // namespace coorp
