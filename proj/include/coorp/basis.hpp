#pragma once

#include <Eigen/Core>
#include <vector>

namespace coorp {

/// Trial matrices for the data-driven regulator solve. `anchor` is the
/// minimum-norm solution of C X = -F; `kernel` holds matrices whose
/// column-stacked vectorizations form an orthonormal basis of
/// ker(I_q (x) C), i.e. all X with C X = 0.
struct BasisFamily {
    Eigen::MatrixXd anchor;              // X_1, n x q
    std::vector<Eigen::MatrixXd> kernel; // X_2 ... X_{h+1}

    int count() const { return static_cast<int>(kernel.size()); } // h
};

/// Builds the family by a minimum-norm solve plus an SVD of I_q (x) C.
/// C must have full row rank; then h = (n - p) q.
BasisFamily null_basis(const Eigen::MatrixXd& C, const Eigen::MatrixXd& F, int q);

} // namespace coorp
