#pragma once

#include <Eigen/Core>

namespace coorp {

/// Block-diagonal skew matrix with 2x2 blocks [[0, w_r], [-w_r, 0]].
/// Builds the exosystem matrix from true frequencies and the observer's
/// estimate from adapted ones.
Eigen::MatrixXd harmonic_matrix(const Eigen::VectorXd& frequencies);

/// Autonomous harmonic-oscillator exosystem v' = E v.
class ExosystemModel {
public:
    explicit ExosystemModel(Eigen::VectorXd frequencies);

    int dim() const { return 2 * static_cast<int>(frequencies_.size()); }
    const Eigen::VectorXd& frequencies() const { return frequencies_; }
    const Eigen::MatrixXd& matrix() const { return e_; }

private:
    Eigen::VectorXd frequencies_;
    Eigen::MatrixXd e_;
};

/// One follower: x' = A x + B u + D v, e = C x + F v.
struct AgentModel {
    Eigen::MatrixXd A, B, C, D, F;
    int index = 0;

    int state_dim() const { return static_cast<int>(A.rows()); }
    int input_dim() const { return static_cast<int>(B.cols()); }
    int output_dim() const { return static_cast<int>(C.rows()); }
    int exo_dim() const { return static_cast<int>(D.cols()); }

    /// Throws on inconsistent matrix dimensions.
    void validate_dimensions() const;

    /// (A, B) stabilizable: controllability-matrix rank test, falling back
    /// to an eigenvalue rank test on unstable modes.
    bool stabilizable(double tol = 1e-9) const;

    /// (C, A) observable: observability-matrix rank test.
    bool observable(double tol = 1e-9) const;

    /// rank [A - lambda I, B; C, 0] = n + p at every eigenvalue of E
    /// (no transmission zero coincides with an exosystem mode).
    bool transmission_condition(const Eigen::MatrixXd& E, double tol = 1e-9) const;
};

} // namespace coorp
