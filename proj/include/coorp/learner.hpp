#pragma once

#include "coorp/basis.hpp"
#include "coorp/collect.hpp"

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace coorp {

/// The collected data cannot identify the unknowns (rank or conditioning
/// failure). Suggests the standard remedies in the message.
struct ExcitationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A learned quantity came out inconsistent (non-positive-definite value
/// matrix, unstable gain, or regulator residual out of tolerance).
struct LearningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AdpStep {
    Eigen::MatrixXd P;      // n x n, symmetric
    Eigen::MatrixXd K_next; // m x n
    Eigen::MatrixXd Lambda; // q x n, estimate of (D - S(X_j))' P
    double condition = 0.0; // of the regression matrix
};

/// One least-squares pass over the data of a single trial matrix:
/// solves the regression
///   [dxx, -2 gxx (I (x) K'R) - 2 gxu (I (x) R), -2 gxv] theta = -gxx vec(Q + K'RK)
/// for theta = [vecs(P); vec(K_next); vec((D - S(X_j))' P)].
AdpStep adp_solve_step(const DataMatrices& data,
                       const Eigen::MatrixXd& K,
                       const Eigen::MatrixXd& Q,
                       const Eigen::MatrixXd& R,
                       double condition_limit = 1e12);

struct FeedbackLearning {
    Eigen::MatrixXd P;                  // terminal value matrix
    Eigen::MatrixXd K;                  // gain used in the terminal pass
    Eigen::MatrixXd K_next;             // improved gain from the terminal pass
    Eigen::MatrixXd Lambda0;            // terminal Lambda of this trial
    int iterations = 0;                 // passes until the stopping rule fired
    std::vector<Eigen::MatrixXd> history; // P per pass
    std::vector<double> deltas;           // |P_k - P_{k-1}|_F per pass
};

/// Policy iteration over the unshifted-trajectory data: repeats
/// adp_solve_step until |P_k - P_{k-1}|_F < eps, from a stabilizing K0.
FeedbackLearning learn_feedback(const DataMatrices& data0,
                                const Eigen::MatrixXd& K0,
                                const Eigen::MatrixXd& Q,
                                const Eigen::MatrixXd& R,
                                double eps = 1e-4,
                                int max_iter = 50);

/// Re-solves the regression of one trial matrix with the terminal P and
/// gains frozen, leaving only the Lambda block unknown. Used for the
/// per-trial Sylvester extraction after the policy iteration has
/// converged.
Eigen::MatrixXd solve_sylvester_block(const DataMatrices& data,
                                      const Eigen::MatrixXd& K,
                                      const Eigen::MatrixXd& P,
                                      const Eigen::MatrixXd& K_next,
                                      const Eigen::MatrixXd& Q,
                                      const Eigen::MatrixXd& R,
                                      double condition_limit = 1e12);

struct SylvesterValues {
    Eigen::MatrixXd D_hat;          // n x q
    std::vector<Eigen::MatrixXd> S; // S(X_j) for the anchor and each kernel element
};

/// Recovers D and the Sylvester-map values from the per-trial Lambda
/// blocks: the zero trial gives Lambda_0 = D' P, so
/// S(X_j)' P = Lambda_0 - Lambda_j for every j >= 1.
SylvesterValues extract_sylvester(const std::vector<Eigen::MatrixXd>& lambdas,
                                  const Eigen::MatrixXd& P);

struct RegulatorSolution {
    Eigen::MatrixXd X; // n x q
    Eigen::MatrixXd U; // m x q
    Eigen::VectorXd alpha;
    double residual = 0.0; // |S(X) - B_hat U - D_hat|_F
};

/// Data-driven regulator solve. X = anchor + sum alpha_j kernel_j keeps
/// C X + F = 0 automatically; the input matrix is recovered as
/// B_hat = P^{-1} K_next' R, U from S(X) = B_hat U + D_hat, and alpha
/// minimizes Tr(X' Qbar X + U' Rbar U) over the feasible set.
RegulatorSolution solve_regulator(const BasisFamily& basis,
                                  const SylvesterValues& syl,
                                  const Eigen::MatrixXd& P,
                                  const Eigen::MatrixXd& K_next,
                                  const Eigen::MatrixXd& R,
                                  const Eigen::MatrixXd& Qbar,
                                  const Eigen::MatrixXd& Rbar,
                                  double residual_tol = 1e-4);

/// L = U + K X.
Eigen::MatrixXd feedforward_gain(const Eigen::MatrixXd& K,
                                 const Eigen::MatrixXd& X,
                                 const Eigen::MatrixXd& U);

/// u = -K x + L eta.
Eigen::VectorXd control_law(const Eigen::MatrixXd& K,
                            const Eigen::MatrixXd& L,
                            const Eigen::VectorXd& x,
                            const Eigen::VectorXd& eta);

/// Everything one agent learned, plus the iteration history.
struct LearnedPolicy {
    Eigen::MatrixXd P, K, L, X, U;
    Eigen::VectorXd alpha;
    int iterations = 0;
    std::vector<double> step_deltas;  // |P_k - P_{k-1}|_F
    std::vector<double> oracle_gaps;  // |P_k - P*|_F when a reference is known
    double regulator_residual = 0.0;
};

} // namespace coorp
