#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

namespace coorp {

/// Gains of the distributed adaptive observer. `a` builds the stable part
/// -bdiag(a_r I_2); `kappa` drives the frequency adaptation. All positive.
struct ObserverGains {
    Eigen::VectorXd a;
    Eigen::VectorXd kappa;

    void validate(int q) const;

    /// -bdiag(a_r I_2), Hurwitz diagonal.
    Eigen::MatrixXd stable_part() const;
};

/// Per-agent observer state: exostate estimate and frequency estimates.
struct ObserverState {
    Eigen::VectorXd eta;
    Eigen::VectorXd what;
};

/// Local observation error
///   eps_i = sum_j a_ij (eta_i - eta_j) + m_ii (eta_i - v).
/// `leader_state` must be present exactly when m_ii = 1.
Eigen::VectorXd local_error(const Eigen::VectorXd& eta_i,
                            const std::vector<std::pair<double, Eigen::VectorXd>>& neighbor_etas,
                            bool has_leader_access,
                            const std::optional<Eigen::VectorXd>& leader_state);

struct ObserverDerivative {
    Eigen::VectorXd eta_dot;
    Eigen::VectorXd what_dot;
};

/// Observer dynamics:
///   eta' = Ehat eta + (A_m - Ehat) eps
///   what_r' = kappa_r (eta_{2r-1} eps_{2r} - eta_{2r} eps_{2r-1})   (1-based pairing)
ObserverDerivative observer_rhs(const ObserverState& state,
                                const Eigen::VectorXd& eps,
                                const ObserverGains& gains);

} // namespace coorp
