#pragma once

#include "coorp/model.hpp"

#include <Eigen/Core>
#include <vector>

namespace coorp {

/// Unique symmetric P with P A_cl + A_cl' P + W = 0, solved through the
/// vectorized linear system. A_cl must be Hurwitz.
Eigen::MatrixXd lyapunov_solve(const Eigen::MatrixXd& a_cl, const Eigen::MatrixXd& w);

/// Largest real part of the spectrum.
double spectral_abscissa(const Eigen::MatrixXd& a);

struct KleinmanResult {
    Eigen::MatrixXd P; // stabilizing Riccati solution
    Eigen::MatrixXd K; // R^{-1} B' P
    int iterations = 0;
    std::vector<Eigen::MatrixXd> history; // P_0, P_1, ...
};

/// Policy iteration on the continuous-time Riccati equation:
/// alternates the Lyapunov policy-evaluation solve with the gain update
/// K_{k+1} = R^{-1} B' P_k until |P_k - P_{k-1}|_F < tol.
KleinmanResult kleinman(const Eigen::MatrixXd& A,
                        const Eigen::MatrixXd& B,
                        const Eigen::MatrixXd& Q_out,
                        const Eigen::MatrixXd& R,
                        const Eigen::MatrixXd& K0,
                        double tol = 1e-10,
                        int max_iter = 100);

struct RegulatorPair {
    Eigen::MatrixXd X; // n x q
    Eigen::MatrixXd U; // m x q
};

/// Solves X E = A X + B U + D, 0 = C X + F, minimizing
/// Tr(X' Qbar X + U' Rbar U) over the affine solution set.
RegulatorPair exact_regulator(const Eigen::MatrixXd& A,
                              const Eigen::MatrixXd& B,
                              const Eigen::MatrixXd& C,
                              const Eigen::MatrixXd& D,
                              const Eigen::MatrixXd& F,
                              const Eigen::MatrixXd& E,
                              const Eigen::MatrixXd& Qbar,
                              const Eigen::MatrixXd& Rbar);

struct OracleSolution {
    Eigen::MatrixXd P, K, X, U, L;
};

/// Model-based reference: Riccati solution via policy iteration plus the
/// exact regulator pair, composed into L = U + K X.
OracleSolution optimal_policy(const AgentModel& model,
                              const Eigen::MatrixXd& E,
                              const Eigen::MatrixXd& Q_out,
                              const Eigen::MatrixXd& R,
                              const Eigen::MatrixXd& Qbar,
                              const Eigen::MatrixXd& Rbar);

/// God-mode helper (uses the true model): a stabilizing initial gain.
/// Single-input systems get Ackermann placement at -1, -2, ..., -n;
/// multi-input systems fall back to a Lyapunov-based construction.
Eigen::MatrixXd stabilizing_gain(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

} // namespace coorp
